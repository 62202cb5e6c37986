"""Pre-order array form of a proof tree, shared by the layout engines."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .proof import InferenceNode, Path, Proof


@dataclass(slots=True)
class FlatTree:
    """Nodes in pre-order; parents precede children, premises keep order."""

    nodes: list[InferenceNode]
    paths: list[Path]
    parent: np.ndarray         # int64, -1 at the root
    premise_index: np.ndarray  # int64, position among the parent's premises
    arity: np.ndarray          # int64
    depth: np.ndarray          # int64

    def __len__(self) -> int:
        return len(self.nodes)

    def index_by_path(self) -> dict[Path, int]:
        return {p: i for i, p in enumerate(self.paths)}


def flatten(proof: Proof | InferenceNode) -> FlatTree:
    root = proof.root if isinstance(proof, Proof) else proof
    nodes: list[InferenceNode] = []
    paths: list[Path] = []
    parent: list[int] = []
    premise_index: list[int] = []
    stack: list[tuple[InferenceNode, int, int, Path]] = [(root, -1, 0, ())]
    while stack:
        node, par, pidx, path = stack.pop()
        i = len(nodes)
        nodes.append(node)
        paths.append(path)
        parent.append(par)
        premise_index.append(pidx)
        for j in range(len(node.premises) - 1, -1, -1):
            stack.append((node.premises[j], i, j, path + (j,)))

    parent_a = np.asarray(parent, np.int64)
    premise_a = np.asarray(premise_index, np.int64)
    arity_a = np.asarray([len(n.premises) for n in nodes], np.int64)
    depth_a = np.zeros(len(nodes), np.int64)
    for i in range(1, len(nodes)):
        depth_a[i] = depth_a[parent_a[i]] + 1
    return FlatTree(nodes, paths, parent_a, premise_a, arity_a, depth_a)
