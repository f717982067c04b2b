"""Shared family builders for the test suite.

The bundled configs are loaded through the same package-data path the
CLI uses, so the JSON files themselves stay under test.  Two extra
in-code families cover behaviors the bundled ones cannot: `steps` meets
every divided-difference hypothesis, and `skew` is a generic family
whose first diagonal moment differs from 1.
"""
import json
from importlib import resources

from biorth import family_from_config


def bundled(name):
    text = resources.files("biorth").joinpath("data", name + ".json").read_text()
    return family_from_config(json.loads(text))


def jacobi_family():
    return bundled("jacobi")


def power_weight_family():
    return bundled("power-weight")


def bessel_case_family():
    return bundled("bessel-case")


def steps_family():
    # alpha_n = 1 + n, beta_n = 1, gamma_n = 1, delta_n = 3 + n:
    # lambda_j = -(1 + j) are distinct, every cross product
    # alpha_l delta_k - beta_l gamma_k = (1+l)(3+k) - 1 is positive,
    # and the diagonal moments are nonzero.
    return family_from_config({
        "name": "steps",
        "kind": "polynomial",
        "basis": "pochhammer-3",
        "a": ["1", "-1"],
        "b": ["1"],
        "c": ["1"],
        "d": ["3", "-1"],
        "support": "(0,1)",
    })


def skew_family():
    # alpha_n = 2 + n, beta_n = 1, gamma_n = 5 + 2n, delta_n = 1 + n:
    # hypotheses hold and m_1(lambda_1) != 1, which separates the
    # telescoped divided-difference system from the published product
    # recursion.
    return family_from_config({
        "name": "skew",
        "kind": "polynomial",
        "basis": "pochhammer-3",
        "a": ["2", "-1"],
        "b": ["1"],
        "c": ["5", "-2"],
        "d": ["1", "-1"],
        "support": "(0,1)",
    })
