import os
from functools import lru_cache

from core.exceptions import DomainError
from models.salem import SalemNumber
from services.poly_service import parse_poly
from services.salem_service import verify_salem

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "fixtures")

FIXTURES = {
    "quartic": "quartic_salem.txt",
    "sextic": "sextic_salem.txt",
}


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise DomainError(f"unknown fixture {name!r}, expected one of {sorted(FIXTURES)}")
    with open(os.path.join(FIXTURE_DIR, FIXTURES[name]), encoding="utf-8") as f:
        return f.read().strip()


@lru_cache(maxsize=None)
def load_fixture(name: str) -> SalemNumber:
    """Minimal polynomial from data/fixtures, verified on load."""
    return verify_salem(parse_poly(fixture_text(name)))
