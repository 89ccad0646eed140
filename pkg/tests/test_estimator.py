import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from homshift.estimator import HomShiftClassifier, WalkDiameterTransformer
from homshift.errors import DomainError
from homshift.graph import fixture

GRAPHS = ["fixture:hard_square", "fixture:cycle:3", fixture("cycle", 4)]


def test_params_roundtrip():
    clf = HomShiftClassifier(max_n=1, target="phased_SI")
    params = clf.get_params()
    assert params["max_n"] == 1 and params["target"] == "phased_SI"
    again = clone(clf).set_params(max_n=2)
    assert again.max_n == 2 and clf.max_n == 1


def test_predict_phased_verdicts():
    clf = HomShiftClassifier(max_n=1).fit(GRAPHS)
    assert list(clf.predict(GRAPHS)) == ["yes", "no", "yes"]
    assert list(clf.classes_) == ["no", "unknown", "yes"]
    assert len(clf.reports_) == 3
    assert clf.score(GRAPHS, ["yes", "no", "yes"]) == 1.0


def test_boolean_target():
    clf = HomShiftClassifier(target="mixing", max_n=0).fit(GRAPHS)
    assert list(clf.predict(GRAPHS)) == ["yes", "yes", "no"]


def test_unfitted_and_bad_input():
    with pytest.raises(NotFittedError):
        HomShiftClassifier().predict(GRAPHS)
    with pytest.raises(DomainError):
        HomShiftClassifier().fit([3.5])


def test_transformer_rows_and_pipeline_names():
    tr = WalkDiameterTransformer(n_max=2)
    out = tr.fit_transform(["fixture:hard_square", "fixture:cycle:3"])
    np.testing.assert_array_equal(out, [[1, 2, 2], [1, 3, 5]])
    assert list(tr.get_feature_names_out()) == ["diam_n0", "diam_n1", "diam_n2"]
    pipe = make_pipeline(WalkDiameterTransformer(n_max=1))
    assert pipe.fit_transform([fixture("complete", 2)]).shape == (1, 2)
