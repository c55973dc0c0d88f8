import importlib
import inspect
import pkgutil

import pytest

import liecx

MODULES = sorted(info.name for info in pkgutil.walk_packages(liecx.__path__, "liecx."))


def _undocumented(module) -> list:
    missing = []
    for name, value in vars(module).items():
        if getattr(value, "__module__", None) != module.__name__:
            continue
        if inspect.isfunction(value) and not value.__doc__:
            missing.append(name)
        elif inspect.isclass(value):
            for attr, member in vars(value).items():
                if attr.startswith("__"):
                    continue
                func = member.fget if isinstance(member, property) else getattr(member, "__func__", member)
                if inspect.isfunction(func) and not func.__doc__:
                    missing.append(f"{name}.{attr}")
    return missing


@pytest.mark.parametrize("name", MODULES)
def test_functions_and_methods_have_docstrings(name):
    assert _undocumented(importlib.import_module(name)) == []
