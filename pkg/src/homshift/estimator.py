"""scikit-learn compatible wrappers.

``HomShiftClassifier`` predicts the phased block-gluing verdict of each graph
in a collection; ``WalkDiameterTransformer`` maps graphs to their walk-graph
diameter profiles, usable as features in a pipeline.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .classify import Limits, classify
from .walkgraph import DEFAULT_BUDGET, build_walk_graph, diameter
from .sofic import DEFAULT_PAIR_BUDGET
from .validation import check_graphs

__all__ = ["HomShiftClassifier", "WalkDiameterTransformer"]


class HomShiftClassifier(ClassifierMixin, BaseEstimator):
    """Rule-based classifier: nothing is learned from ``y``.

    ``fit`` classifies the training graphs and stores their reports;
    ``predict`` returns one of ``"yes"``, ``"no"``, ``"unknown"`` per graph
    for the property named by ``target``.
    """

    def __init__(
        self,
        target="phased_block_gluing",
        max_n=2,
        walk_budget=DEFAULT_BUDGET,
        pair_budget=DEFAULT_PAIR_BUDGET,
        collapse_budget=200_000,
    ):
        self.target = target
        self.max_n = max_n
        self.walk_budget = walk_budget
        self.pair_budget = pair_budget
        self.collapse_budget = collapse_budget

    def _limits(self):
        return Limits(
            max_n=self.max_n,
            walk_budget=self.walk_budget,
            pair_budget=self.pair_budget,
            collapse_budget=self.collapse_budget,
        )

    def _verdict(self, report):
        value = getattr(report, self.target)
        if hasattr(value, "value"):
            return value.value
        if isinstance(value, bool):
            return "yes" if value else "no"
        return value

    def fit(self, X, y=None):
        graphs = check_graphs(X)
        self.reports_ = [classify(g, self._limits()) for g in graphs]
        self.classes_ = np.array(["no", "unknown", "yes"])
        return self

    def predict(self, X):
        check_is_fitted(self, "reports_")
        limits = self._limits()
        return np.array([self._verdict(classify(g, limits)) for g in check_graphs(X)])

    def predict_reports(self, X):
        check_is_fitted(self, "reports_")
        return [classify(g, self._limits()) for g in check_graphs(X)]


class WalkDiameterTransformer(TransformerMixin, BaseEstimator):
    """Rows of ``diam(walk graph at n)`` for ``n = 0..n_max``; ``inf`` if disconnected."""

    def __init__(self, n_max=2, budget=DEFAULT_BUDGET):
        self.n_max = n_max
        self.budget = budget

    def fit(self, X=None, y=None):
        self.n_features_out_ = self.n_max + 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        graphs = check_graphs(X)
        out = np.empty((len(graphs), self.n_max + 1))
        for r, g in enumerate(graphs):
            for n in range(self.n_max + 1):
                out[r, n] = diameter(build_walk_graph(g, n, self.budget))
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array([f"diam_n{n}" for n in range(self.n_max + 1)], dtype=object)
