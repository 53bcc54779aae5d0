#!/usr/bin/env python3

import importlib
import os

from vonroos_zero.cases.base_case import (  # noqa
    BaseCase,
    CaseCouplings,
    PotentialKind,
)
from vonroos_zero.errors import UnknownCaseError


CASE_REGISTRY = {}


def build_case(case_id):
    try:
        return CASE_REGISTRY[int(case_id)]()
    except (KeyError, ValueError):
        raise UnknownCaseError(
            f"Unknown case {case_id!r}; expected one of {sorted(CASE_REGISTRY)}"
        )


def register_case(case_id):
    """Decorator to register a separable case under its number."""

    def register_case_cls(cls):
        if case_id in CASE_REGISTRY:
            raise ValueError("Cannot register duplicate case ({})".format(case_id))
        if not issubclass(cls, BaseCase):
            raise ValueError(
                "Case ({} : {}) must extend BaseCase".format(case_id, cls.__name__)
            )
        cls.case_id = case_id
        CASE_REGISTRY[case_id] = cls
        return cls

    return register_case_cls


# automatically import any Python files in the cases/ directory
for file in sorted(os.listdir(os.path.dirname(__file__))):
    if file.endswith(".py") and not file.startswith("_"):
        module = file[: file.find(".py")]
        importlib.import_module("vonroos_zero.cases.{}".format(module))
