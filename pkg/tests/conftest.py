import sympy as sp
from hypothesis import settings

from hecke_spheres.scalars import Scalar

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

p, q = sp.symbols("p q", positive=True)
_NS = {"p": p, "q": q}


def to_sympy(x: Scalar):
    """Independent reading of a Scalar through its printed form."""
    return sp.sympify(str(x).replace("^", "**"), locals=_NS)


def same(x: Scalar, expr) -> bool:
    return sp.simplify(to_sympy(x) - sp.sympify(expr, locals=_NS)) == 0


ACCEPTANCE_LINES = []


def record(criterion: int, passed: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
