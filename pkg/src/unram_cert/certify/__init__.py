"""Certificate schema, replay engine and the proof-specific rules."""

from importlib import resources

from .engine import COLLECT_ALL, FAIL, FAIL_FAST, PASS, TRUSTED, ClaimResult, Report, check_certificate
from .rules import abhyankar_unramified, elementary_rank_case_split, stem_extension_rule
from .schema import (CITATION_WHITELIST, KINDS, Branch, Certificate, Step, citation_allowed, from_dict,
                     load_certificate, validate)

SHIPPED = ("q22268", "qm1567")


def shipped_certificate_text(name):
    if name not in SHIPPED:
        raise KeyError(f"no shipped certificate {name!r}; have {', '.join(SHIPPED)}")
    return resources.files("unram_cert.data").joinpath(f"{name}.toml").read_text()


def shipped_certificate(name):
    """Load one of the bundled certificates by name."""
    return load_certificate(shipped_certificate_text(name))
