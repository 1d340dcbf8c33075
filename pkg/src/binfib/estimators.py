"""scikit-learn style wrappers around the guess, verify and ratio pipelines.

The "data" here is an index sequence rather than a feature matrix: ``fit``
takes a driving sequence (or a list of values) and ``predict`` maps indices
``n`` to outputs, so these estimators plug into ``get_params``/``set_params``
and ``clone`` but not into pipelines that expect 2-D arrays.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .dfaoguess import GuessConfig, guess_dfao, verify_ratio_dfao
from .seqcore import RatioEngine, compute_f_numeric, compute_h
from .sequences import to_dfao
from .validation import check_base, check_coefficients, check_horizon, check_sequence


def _check_fitted(est, attr):
    if not hasattr(est, attr):
        raise NotFittedError(f"{type(est).__name__} is not fitted yet; call fit first")


def _indices(X):
    n = np.asarray(X, dtype=object).ravel()
    if any(int(v) < 0 for v in n):
        raise ValueError("indices must be non-negative")
    return [int(v) for v in n]


class KernelDFAOGuesser(BaseEstimator):
    """Fit a DFAO to a finite list of values through its k-kernel."""

    def __init__(self, base=2, max_states=512, direction="lsd", min_evidence=8):
        self.base = base
        self.max_states = max_states
        self.direction = direction
        self.min_evidence = min_evidence

    def fit(self, values, y=None):
        values = list(values)
        cfg = GuessConfig(
            base=check_base(self.base),
            horizon=len(values),
            max_states=self.max_states,
            direction=self.direction,
            min_evidence=self.min_evidence,
        )
        self.automaton_ = guess_dfao(values, cfg)
        self.n_states_ = self.automaton_.num_states
        return self

    def predict(self, X):
        _check_fitted(self, "automaton_")
        return np.array([self.automaton_(n) for n in _indices(X)], dtype=object)


class RatioAutomatonEstimator(BaseEstimator):
    """Guess and prove a DFAO for the symbolic ratio sequence of a driving sequence.

    ``fit(u)`` computes ``horizon`` symbolic ratios, guesses an automaton and
    verifies it; ``predict`` returns intern ids and ``transform`` the ratios as
    canonical strings.
    """

    def __init__(self, horizon=2 ** 16, base=2, max_states=512, require_proof=True):
        self.horizon = horizon
        self.base = base
        self.max_states = max_states
        self.require_proof = require_proof

    def fit(self, u, y=None):
        u = check_sequence(u)
        horizon = check_horizon(self.horizon, "guess")
        engine = RatioEngine()
        values = engine.run(u, horizon)
        cfg = GuessConfig(base=check_base(self.base), horizon=horizon, max_states=self.max_states)
        K = guess_dfao(values, cfg)
        cert = verify_ratio_dfao(K, to_dfao(u, self.base), engine.table)
        if self.require_proof and not cert.proved:
            raise ValueError(f"guessed automaton is refuted: {cert.counterexample}")
        self.automaton_ = K
        self.table_ = engine.table
        self.certificate_ = cert
        self.n_states_ = K.num_states
        self.n_outputs_ = len(set(K.outputs))
        return self

    def predict(self, X):
        _check_fitted(self, "automaton_")
        return np.array([self.automaton_(n) for n in _indices(X)], dtype=object)

    def transform(self, X):
        _check_fitted(self, "automaton_")
        return np.array([str(self.table_[self.automaton_(n)]) for n in _indices(X)], dtype=object)


class NumericRatioTransformer(TransformerMixin, BaseEstimator):
    """Map indices to exact ratios ``f(n+1)/f(n)`` for fixed ``a, b``; ``None`` where undefined."""

    def __init__(self, a=1, b=1):
        self.a = a
        self.b = b

    def fit(self, u, y=None):
        check_coefficients(self.a, self.b)
        self.sequence_ = check_sequence(u)
        self._cache = []
        return self

    def _ratios(self, n_max):
        if len(self._cache) <= n_max:
            f = compute_f_numeric(self.a, self.b, self.sequence_, max(n_max + 1, 2 * len(self._cache), 16))
            self._cache = [p.value for p in compute_h(f)]
        return self._cache

    def transform(self, X):
        _check_fitted(self, "sequence_")
        idx = _indices(X)
        h = self._ratios(max(idx, default=0))
        return np.array([h[n] for n in idx], dtype=object)
