"""scikit-learn transformer exposing the associated polynomials as features."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .aqaw import QParameters, assoc_polynomial_values, is_real_orthogonality
from .spectral import expected_norms


class AssociatedAWFeatures(TransformerMixin, BaseEstimator):
    """Map each column ``x`` to ``[P_0(x), ..., P_degree(x)]``.

    With ``orthonormal=True`` each ``P_n`` is divided by the square root of
    its norm so that the features are orthonormal under the weight; this
    needs parameters in the real-orthogonality regime.
    """

    def __init__(self, degree=5, q=0.5, alpha=0.4, beta=0.4, gamma=0.4, delta=0.4, epsilon=0.5,
                 orthonormal=False):
        self.degree = degree
        self.q = q
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.delta = delta
        self.epsilon = epsilon
        self.orthonormal = orthonormal

    def _params(self) -> QParameters:
        return QParameters(self.q, self.alpha, self.beta, self.gamma, self.delta, self.epsilon)

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64)
        if not (isinstance(self.degree, (int, np.integer)) and self.degree >= 0):
            raise ValueError(f"degree must be a nonnegative integer, got {self.degree!r}")
        params = self._params()
        scale = np.ones(self.degree + 1)
        if self.orthonormal:
            if not is_real_orthogonality(params, max(self.degree, 1)):
                raise ValueError("orthonormal features need parameters with real positive b'^2_n")
            scale = 1.0 / np.sqrt(np.asarray(expected_norms(params, self.degree)))
        self.params_ = params
        self.scale_ = scale
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "scale_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        k = self.degree + 1
        out = np.empty((X.shape[0], X.shape[1] * k))
        for j in range(X.shape[1]):
            for i, x in enumerate(X[:, j]):
                vals = assoc_polynomial_values(self.params_, self.degree, float(x))
                out[i, j * k:(j + 1) * k] = np.real(np.asarray(vals, dtype=complex)) * self.scale_
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "scale_")
        if input_features is None:
            input_features = [f"x{j}" for j in range(self.n_features_in_)]
        return np.asarray([f"{name}_P{n}" for name in input_features for n in range(self.degree + 1)],
                          dtype=object)
