from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from binfib.estimators import KernelDFAOGuesser, NumericRatioTransformer, RatioAutomatonEstimator
from binfib.sequences import ThueMorse

from conftest import h_oracle, tm


def test_ratio_estimator_ptm():
    est = RatioAutomatonEstimator(horizon=2 ** 14, max_states=1024)
    est.fit("ptm")
    assert est.n_states_ == 23 and est.n_outputs_ == 7
    assert est.certificate_.proved
    assert list(est.predict([0, 1, 2])) == [0, 1, 2]
    assert est.transform([1])[0] == "a + b"


def test_clone_and_params():
    est = RatioAutomatonEstimator(horizon=4096)
    c = clone(est)
    assert c.get_params()["horizon"] == 4096
    with pytest.raises(NotFittedError):
        c.predict([0])


def test_kernel_guesser():
    g = KernelDFAOGuesser(max_states=16).fit([tm(n) for n in range(1024)])
    assert g.n_states_ == 2
    assert list(g.predict(np.arange(8))) == [tm(n) for n in range(8)]


def test_numeric_transformer():
    t = NumericRatioTransformer(a=2, b=3).fit(ThueMorse())
    expected = h_oracle(2, 3, tm, 59)
    assert list(t.transform(range(60))) == expected
    assert t.transform([1])[0] == Fraction(5)


def test_numeric_transformer_validation():
    with pytest.raises(TypeError):
        NumericRatioTransformer(a=1.5).fit("ptm")
    with pytest.raises(ValueError):
        NumericRatioTransformer().fit("ptm").transform([-1])
