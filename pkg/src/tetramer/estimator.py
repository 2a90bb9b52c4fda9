"""scikit-learn transformer mapping parameter rows to an entanglement quantity."""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .config import mu_b_over_kb
from .scan import QUANTITIES, evaluate
from .states import density_matrix


class EntanglementTransformer(TransformerMixin, BaseEstimator):
    """Rows (J, J1, h, T) to one column holding ``quantity``.

    With ``unit_mode="kelvin"`` the columns are J/k_B, J1/k_B in kelvin,
    B in tesla and T in kelvin; otherwise h and T are in the same units
    as J (k_B = 1). T = 0 selects the ground-state mixture.
    """

    def __init__(self, quantity: str = "theta", unit_mode: str = "normalized", g: float = 2.2):
        self.quantity = quantity
        self.unit_mode = unit_mode
        self.g = g

    def _validate_params(self):
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if self.unit_mode not in ("normalized", "kelvin"):
            raise ValueError("unit_mode must be 'normalized' or 'kelvin'")
        if not self.g > 0:
            raise ValueError("g must be positive")

    def _check_X(self, X) -> np.ndarray:
        X = check_array(X, dtype=float)
        if X.shape[1] != 4:
            raise ValueError(f"expected 4 columns (J, J1, h, T), got {X.shape[1]}")
        if np.any(X[:, 3] < 0):
            raise ValueError("temperature column must be nonnegative")
        return X

    def fit(self, X, y=None):
        self._validate_params()
        X = self._check_X(X)
        self.n_features_in_ = X.shape[1]
        self.field_scale_ = self.g * mu_b_over_kb() if self.unit_mode == "kelvin" else 1.0
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "field_scale_")
        X = self._check_X(X)
        out = np.empty((X.shape[0], 1))
        for i, (J, J1, h, T) in enumerate(X):
            if self.unit_mode == "normalized" and J == 0:
                raise ValueError(f"row {i}: normalized mode needs J != 0")
            beta = math.inf if T == 0 else 1.0 / T
            out[i, 0] = evaluate(density_matrix(J, J1, h * self.field_scale_, beta), self.quantity)
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array([self.quantity], dtype=object)
