"""Local HTTP/JSON API for the explorer UI.

The server is stateless per request: selection, zoom and view state all
live in the client.  Proofs are parsed once into an immutable registry
(at startup from a directory, or via upload) and every layout response
is exactly what the corresponding library call returns, serialized with
radii normalized to 1.

Endpoints:
    GET  /api/proofs
    POST /api/proofs                         (body: proof JSON, returns {"id"})
    GET  /api/proofs/{id}/stats
    GET  /api/proofs/{id}/sunburst?metric=count|weighted&profile=NAME
    GET  /api/proofs/{id}/sunburst/zoom?select=PATH&metric=&profile=
    GET  /api/proofs/{id}/gentzen?hide=true|false&notation=unicode|ascii
    GET  /api/proofs/{id}/node/{path}
    GET  /api/proofs/{id}/ancestors?mode=cut | ?occ=PATH:side:idx
    GET  /api/proofs/{id}/bounds/{path}
    GET  /                                   (UI bundle, if one is built)
"""

from __future__ import annotations

import threading
from pathlib import Path as FilePath
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse

from .ancestry import ancestors, cut_ancestors
from .formulas import FormulaPrinter, format_term
from .gentzen import (
    GentzenParams,
    PathNotFound,
    bounds_of,
    layout_gentzen,
    layout_to_dict as gentzen_dict,
    render_sequent,
)
from .metrics import ColorProfile, default_profile, load_profile, rule_weighted, stats
from .proof import (
    InvalidOcc,
    OccRef,
    PathOutOfRange,
    Proof,
    Side,
    node_at,
    parse_path,
    path_str,
    subtree_size,
)
from .proofjson import ParseError, parse_proof
from .sunburst import (
    SunburstParams,
    layout_sunburst,
    layout_to_dict as sunburst_dict,
    layout_zoom,
    zoom_to_dict,
)
from .validate import Severity, validate_structure


class BadQuery(ValueError):
    """Malformed query parameter; mapped to HTTP 400."""


class ProofEntry:
    """One registered proof plus its lazily cached derived data."""

    def __init__(self, proof_id: str, proof: Proof):
        self.id = proof_id
        self.proof = proof
        self.node_count = subtree_size(proof)
        self.stats = stats(proof).to_dict()
        self._cache: dict[Any, Any] = {}
        self._lock = threading.Lock()

    def cached(self, key: Any, compute):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            self._cache.setdefault(key, value)
            return self._cache[key]


class ProofRegistry:
    """id -> immutable proof; written at startup/upload, read everywhere."""

    def __init__(self):
        self._entries: dict[str, ProofEntry] = {}
        self._lock = threading.Lock()
        self._counter = 0

    def add(self, proof: Proof, proof_id: str | None = None) -> str:
        with self._lock:
            if proof_id is None or proof_id in self._entries:
                self._counter += 1
                base = proof_id or "p"
                proof_id = f"{base}{self._counter}"
                while proof_id in self._entries:
                    self._counter += 1
                    proof_id = f"{base}{self._counter}"
            entry = ProofEntry(proof_id, proof)
            self._entries[proof_id] = entry
            return proof_id

    def get(self, proof_id: str) -> ProofEntry | None:
        with self._lock:
            return self._entries.get(proof_id)

    def entries(self) -> list[ProofEntry]:
        with self._lock:
            return list(self._entries.values())

    def load_directory(self, directory: str) -> int:
        loaded = 0
        root = FilePath(directory)
        if not root.is_dir():
            return 0
        for file in sorted(root.glob("*.json")):
            if file.name.endswith(".profile.json"):
                continue
            try:
                proof = parse_proof(file.read_text(encoding="utf-8"))
            except (ParseError, OSError):
                continue
            self.add(proof, proof_id=file.stem)
            loaded += 1
        return loaded

    @staticmethod
    def load_profiles(directory: str) -> dict[str, ColorProfile]:
        out: dict[str, ColorProfile] = {}
        root = FilePath(directory)
        if root.is_dir():
            for file in sorted(root.glob("*.profile.json")):
                try:
                    prof = load_profile(file.read_text(encoding="utf-8"))
                except (ValueError, OSError):
                    continue
                out[prof.name] = prof
        return out


# ---------------------------------------------------------------------------
# Request-level helpers


def _parse_bool(value: str | None, default: bool = False) -> bool:
    if value is None:
        return default
    v = value.strip().lower()
    if v in ("1", "true", "yes"):
        return True
    if v in ("0", "false", "no"):
        return False
    raise BadQuery(f"not a boolean: {value!r}")


def _sunburst_params(metric: str | None, profile: str | None,
                     profiles: dict[str, ColorProfile]) -> SunburstParams:
    prof = profiles.get(profile or "rainbow")
    if prof is None:
        raise BadQuery(f"unknown profile {profile!r}")
    metric = metric or "count"
    if metric == "count":
        return SunburstParams(profile=prof)
    if metric == "weighted":
        return SunburstParams(profile=prof, metric=rule_weighted(prof))
    raise BadQuery(f'metric must be "count" or "weighted", got {metric!r}')


def _parse_occ(text: str) -> OccRef:
    parts = text.split(":")
    if len(parts) != 3:
        raise BadQuery(f"occ must be PATH:side:index, got {text!r}")
    raw_path, raw_side, raw_idx = parts
    try:
        path = parse_path(raw_path)
    except PathOutOfRange:
        raise BadQuery(f"malformed path in occ: {raw_path!r}") from None
    if raw_side not in ("ant", "suc"):
        raise BadQuery(f'occ side must be "ant" or "suc", got {raw_side!r}')
    try:
        index = int(raw_idx)
    except ValueError:
        raise BadQuery(f"occ index must be an integer, got {raw_idx!r}") from None
    return OccRef(path, Side(raw_side), index)


def _node_info(proof: Proof, path) -> dict:
    node = node_at(proof, path)  # PathOutOfRange -> 404
    printer = FormulaPrinter("unicode")
    info: dict[str, Any] = {
        "path": path_str(path),
        "rule": node.rule.display_name,
        "arity": len(node.premises),
        "conclusion": render_sequent(node.conclusion),
        "aux": [
            {
                "premise": a.premise,
                "side": a.side.value,
                "index": a.index,
                "formula": printer(node.premises[a.premise].conclusion.side(a.side)[a.index]),
            }
            for a in node.aux
        ],
        "principal": [
            {
                "side": p.side.value,
                "index": p.index,
                "formula": printer(node.conclusion.side(p.side)[p.index]),
            }
            for p in node.principal
        ],
        "substitution": (
            {v: format_term(t) for v, t in sorted(node.substitution.items())}
            if node.substitution is not None
            else None
        ),
        "eigenvariable": node.eigenvariable,
    }
    return info


_FALLBACK_PAGE = """<!DOCTYPE html>
<html><head><meta charset="utf-8"><title>proofburst</title></head>
<body><h1>proofburst API</h1>
<p>No UI bundle is built. The JSON API lives under <a href="/api/proofs">/api/proofs</a>.</p>
<p>Build the frontend (see frontend/README.md) or point PROOFBURST_UI at a bundle directory.</p>
</body></html>
"""


def create_app(registry: ProofRegistry, profiles: dict[str, ColorProfile] | None = None,
               ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="proofburst", docs_url=None, redoc_url=None)
    profiles = dict(profiles or {})
    profiles.setdefault("rainbow", default_profile())

    def entry_or_none(pid: str) -> ProofEntry | None:
        return registry.get(pid)

    @app.exception_handler(BadQuery)
    async def _bad_query(request: Request, exc: BadQuery):
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.exception_handler(PathOutOfRange)
    async def _bad_path(request: Request, exc: PathOutOfRange):
        return JSONResponse({"error": f"PathOutOfRange: {exc}"}, status_code=404)

    @app.exception_handler(InvalidOcc)
    async def _bad_occ(request: Request, exc: InvalidOcc):
        return JSONResponse({"error": f"InvalidOcc: {exc}"}, status_code=404)

    def _missing(pid: str) -> JSONResponse:
        return JSONResponse({"error": f"unknown proof {pid!r}"}, status_code=404)

    @app.get("/api/proofs")
    def list_proofs():
        return [
            {"id": e.id, "name": e.proof.name, "nodeCount": e.node_count}
            for e in registry.entries()
        ]

    @app.post("/api/proofs", status_code=201)
    async def upload_proof(request: Request):
        body = await request.body()
        try:
            proof = parse_proof(body)
        except ParseError as e:
            return JSONResponse({"error": f"ParseError: {e}"}, status_code=400)
        diags = [d for d in validate_structure(proof) if d.severity is Severity.ERROR]
        if diags:
            return JSONResponse(
                {"error": "proof is structurally invalid",
                 "diagnostics": [str(d) for d in diags[:20]]},
                status_code=400,
            )
        pid = registry.add(proof)
        return {"id": pid, "name": proof.name, "nodeCount": registry.get(pid).node_count}

    @app.get("/api/proofs/{pid}/stats")
    def proof_stats(pid: str):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        return entry.stats

    @app.get("/api/proofs/{pid}/sunburst")
    def sunburst(pid: str, metric: str | None = None, profile: str | None = None):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        params = _sunburst_params(metric, profile, profiles)
        key = ("sunburst", metric or "count", profile or "rainbow")
        return entry.cached(key, lambda: sunburst_dict(layout_sunburst(entry.proof, params)))

    @app.get("/api/proofs/{pid}/sunburst/zoom")
    def sunburst_zoom(pid: str, select: str = "", metric: str | None = None,
                      profile: str | None = None):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        params = _sunburst_params(metric, profile, profiles)
        try:
            sel = parse_path(select)
        except PathOutOfRange:
            raise BadQuery(f"malformed path {select!r}") from None
        return zoom_to_dict(layout_zoom(entry.proof, sel, params))

    @app.get("/api/proofs/{pid}/gentzen")
    def gentzen(pid: str, hide: str | None = None, notation: str | None = None):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        hide_formulas = _parse_bool(hide)
        notation = notation or "unicode"
        if notation not in ("unicode", "ascii"):
            raise BadQuery(f"unknown notation {notation!r}")
        key = ("gentzen", hide_formulas, notation)
        params = GentzenParams(hide_formulas=hide_formulas, notation=notation)
        return entry.cached(key, lambda: gentzen_dict(layout_gentzen(entry.proof, params)))

    @app.get("/api/proofs/{pid}/node/{path:path}")
    def node_info(pid: str, path: str = ""):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        try:
            parsed = parse_path(path)
        except PathOutOfRange:
            raise BadQuery(f"malformed path {path!r}") from None
        return _node_info(entry.proof, parsed)

    @app.get("/api/proofs/{pid}/ancestors")
    def ancestor_set(pid: str, mode: str | None = None, occ: str | None = None):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        if mode == "cut":
            occs = entry.cached(("cut_ancestors",), lambda: cut_ancestors(entry.proof))
            tag = "cut"
        elif occ is not None:
            occs = ancestors(entry.proof, _parse_occ(occ))
            tag = "occ"
        else:
            raise BadQuery("pass ?mode=cut or ?occ=PATH:side:index")
        ordered = sorted(occs, key=lambda o: (o.path, o.side.value, o.index))
        return {
            "mode": tag,
            "occurrences": [
                {"path": path_str(o.path), "side": o.side.value, "index": o.index}
                for o in ordered
            ],
        }

    @app.get("/api/proofs/{pid}/bounds/{path:path}")
    def bounds(pid: str, path: str = ""):
        entry = entry_or_none(pid)
        if entry is None:
            return _missing(pid)
        params = GentzenParams()
        layout = entry.cached(("gentzen_layout", "default"),
                              lambda: layout_gentzen(entry.proof, params))
        try:
            p = parse_path(path)
        except PathOutOfRange:
            raise BadQuery(f"malformed path {path!r}") from None
        try:
            box = bounds_of(layout, p)
        except PathNotFound as e:
            return JSONResponse({"error": str(e)}, status_code=404)
        return {"path": path_str(box.path), "x": box.x, "y": box.y, "w": box.w, "h": box.h,
                "totalWidth": layout.total_width, "totalHeight": layout.total_height}

    if ui_dir and FilePath(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index():
            return _FALLBACK_PAGE

    return app
