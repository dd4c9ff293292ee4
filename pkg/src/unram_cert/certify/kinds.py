"""One handler per claim kind.  A handler takes coerced inputs and returns
the actual value; ``compare`` decides whether it meets the expectation."""

import enum
from fractions import Fraction

import mpmath
from mpmath import mpf

from ..arith import factorint, gl_order
from ..bounds import (LocalPrimeData, bound_entry, degree_bound, f_series, family_of, grh_rd_lower_bound,
                      load_asymptotic_bounds, rd_contradiction, root_discriminant, tower_rd_rule,
                      yamamura_check)
from ..config import CLOSURE_CAP, CONTRADICTION_MARGIN, M_MAX
from ..errors import NoApplicableEntry
from ..finitefield import (ExtField, FpPolynomial, PrimeField, dedekind_index_test, factor_mod_p,
                           format_factorization, int_poly_discriminant, normalize_factorization_string,
                           splitting_type, unramified_part)
from ..grouplemmas import (AbelianInvariants, min_gl_dim_for_cyclic, p_rank_constraint, schur_multiplier,
                           taussky_rule)
from ..matgroup import (MODELS, MatrixFq, an_class_splits, blowup_embedding, centralizer, field_of_order,
                        find_isomorphism, fixed_space, group_closure, is_A5xC2, module_decompose,
                        perm_order_spectrum, singer_element)
from ..quadclass import class_group, prime_splitting
from .rules import abhyankar_unramified, elementary_rank_case_split, stem_extension_rule


class Actual(dict):
    """A structured result with a primary field that a scalar expectation
    is compared against."""

    primary = None

    def __init__(self, primary, **kw):
        super().__init__(**kw)
        self.primary = primary


# -- matrices --------------------------------------------------------------------------------

def _field(q, modulus):
    if modulus:
        (p, d), = factorint(q).items()
        K = ExtField.of(p, modulus)
        if K.q != q:
            raise ValueError(f"modulus of degree {K.degree} does not give a field of order {q}")
        return K
    return field_of_order(q)


def _matrices(a):
    if "singer" in a:
        n, q, m = a["singer"]
        return [singer_element(n, q, m)]
    if "companion" in a:
        F = PrimeField(a["q"])
        return [MatrixFq.companion(FpPolynomial.from_ints(F, a["companion"].coeffs))]
    if "q" not in a:
        raise ValueError("generators need a field size q")
    F = _field(a["q"], a.get("modulus"))
    mats = [MatrixFq(F, m) for m in a["generators"]]
    if a.get("blowup"):
        mats = [blowup_embedding(m) for m in mats]
    return mats


def _elements(a):
    els, _ = group_closure(_matrices(a), a.get("cap", CLOSURE_CAP))
    return els


# -- handlers --------------------------------------------------------------------------------

def factor_mod(a):
    fac = factor_mod_p(a["poly"], a["p"])
    return Actual("factorization", factorization=format_factorization(fac),
                  squarefree=not fac.has_repeated_factor(), degree=a["poly"].degree)


def splitting(a):
    if a.get("simple_factors_only"):
        st = unramified_part(a["poly"], a["p"])
    else:
        st = splitting_type(a["poly"], a["p"])
    return st.to_list()


def quad_class_group(a):
    cg = class_group(a["D"])
    out = Actual("invariants", invariants=cg.invariants.to_list(), class_number=cg.class_number)
    if a["D"] > 0:
        out["narrow"] = cg.narrow.to_list()
        out["unit_norm"] = cg.unit_norm
    return out


def isomorphism(a):
    mats = _matrices(a)
    els, _ = group_closure(mats, a.get("cap", CLOSURE_CAP))
    if a["model"] == "A5xC2":
        return is_A5xC2(els)
    if a["model"] not in MODELS:
        raise ValueError(f"unknown model {a['model']!r}")
    return find_isomorphism(mats, els, MODELS[a["model"]]()) is not None


def centralizer_check(a):
    r = centralizer(_matrices(a))
    return Actual("unit_count", unit_count=r.unit_count, cyclic=r.is_cyclic, method=r.method)


def order_spectrum(a):
    if "model" in a:
        model = MODELS[a["model"]]()
        out = set()
        for x in model.elements:
            k, y = 1, x
            while not y.is_identity():
                y, k = y * x, k + 1
            out.add(k)
        return sorted(out)
    return sorted(perm_order_spectrum(a["family"], a["n"]))


def f_bound(a):
    local = LocalPrimeData.from_splitting(a["degree"], a["p"], a["e"], a["residue_degree"])
    (norm, count), = local.entries
    value = f_series(local, a["b"], a.get("m_max", M_MAX))
    return Actual("value", value=value, norm=norm, count=count)


def grh_bound(a):
    return grh_rd_lower_bound(a["n"], a["r1"], a["r2"], bound_entry(a["b"]), a["f"])


def contradiction(a):
    margin = a.get("margin", CONTRADICTION_MARGIN)
    if "lower_bound" in a:
        return rd_contradiction(a["lower_bound"], a["rd"], margin)
    # an asymptotic entry of the same family at degree <= the field's
    n = a["degree"]
    r1, r2 = a.get("r1", n), a.get("r2", 0)
    if r1 + 2 * r2 != n:
        raise ValueError("signature does not match the degree")
    fam = family_of(r1, r2)
    usable = [e for e in load_asymptotic_bounds() if e.family == fam and e.n <= n]
    if not usable:
        raise NoApplicableEntry(f"no {fam} entry with degree <= {n}")
    best = max(usable, key=lambda e: e.bound)
    return rd_contradiction(best.bound, a["rd"], margin)


def degree_bound_step(a):
    q, _ = degree_bound(a["rd"], load_asymptotic_bounds(), a["base_degree"], family=a["family"])
    return q


def case_split(a):
    primes = a["p"]
    if len(primes) == 1:
        return elementary_rank_case_split(primes[0], a["size_bound"], a["group"])
    # several primes: report only those admitting some rank
    out = []
    for p in primes:
        ranks = elementary_rank_case_split(p, a["size_bound"], a["group"])
        if ranks:
            out.append([p, ranks])
    return out


def tower(a):
    c = tower_rd_rule(a["rd"], a["unramified"])
    return Actual("value", value=c.value, relation=c.relation)


HANDLERS = {
    "FactorModP": factor_mod,
    "DedekindMaximal": lambda a: dedekind_index_test(a["poly"], a["p"]),
    "SplittingType": splitting,
    "PolyDiscriminant": lambda a: int_poly_discriminant(a["poly"]),
    "AbhyankarUnramified": lambda a: abhyankar_unramified(a["e_upper"], a["e_lower"], a["p"]),
    "QuadClassGroup": quad_class_group,
    "PrimeSplitting": lambda a: prime_splitting(a["D"], a["p"]),
    "GroupClosureOrder": lambda a: len(_elements(a)),
    "IsomorphismCheck": isomorphism,
    "CentralizerCheck": centralizer_check,
    "FixedSpaceCheck": lambda a: fixed_space(_matrices(a)[0]),
    "ModuleDecompositionCheck": lambda a: list(module_decompose(_matrices(a)).constituent_dimensions),
    "OrderSpectrumCheck": order_spectrum,
    "ClassSplitCheck": lambda a: an_class_splits(a["cycle_type"], a["n"]),
    "SchurMultiplierFact": lambda a: schur_multiplier(a["group"]).to_list(),
    "StemExtensionRule": lambda a: stem_extension_rule(a["group"], a["class_number_one"]),
    "PRankConstraint": lambda a: p_rank_constraint(a["n"], a["p"]),
    "TausskyRule": lambda a: taussky_rule(a["p"], a["group"]).value,
    "MinGLDim": lambda a: min_gl_dim_for_cyclic(a["m"], a["q"]),
    "GLOrderDivisibility": lambda a: gl_order(a["n"], a["q"]) % a["divisor"] == 0,
    "RootDiscriminant": lambda a: root_discriminant(a["abs_disc"], a["degree"]),
    "TowerRdEquality": tower,
    "FSeriesBound": f_bound,
    "GrhLowerBound": grh_bound,
    "RdContradiction": contradiction,
    "DegreeBound": degree_bound_step,
    "YamamuraCheck": lambda a: yamamura_check(a["rd"], a["m"], a["n_K"], a["r1"], a["r2"],
                                              load_asymptotic_bounds()),
    "ElementaryRankCaseSplit": case_split,
}

# kinds whose list results are multisets
UNORDERED = {"SplittingType", "OrderSpectrumCheck", "StemExtensionRule", "ModuleDecompositionCheck"}


# -- comparison ------------------------------------------------------------------------------

_MPF = type(mpf(0))


def _num(v):
    if isinstance(v, bool):
        raise ValueError
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    return mpf(v)


def matches(actual, expected, tol):
    try:
        return _matches(actual, expected, tol)
    except (ValueError, TypeError, ArithmeticError, ZeroDivisionError):
        return False


def _matches(actual, expected, tol):
    from .schema import parse_int_expr

    if isinstance(actual, Actual) and not isinstance(expected, dict):
        return _matches(actual[actual.primary], expected, tol)
    if isinstance(actual, bool) or isinstance(expected, bool):
        return type(actual) is bool and type(expected) is bool and actual == expected
    if actual is None or expected is None:
        return actual is expected
    if isinstance(actual, int):
        if isinstance(expected, float):
            return False
        return actual == parse_int_expr(expected)
    if isinstance(actual, Fraction):
        if isinstance(expected, str) and "/" in expected:
            num, den = expected.split("/")
            return actual == Fraction(parse_int_expr(num.strip()), parse_int_expr(den.strip()))
        if isinstance(expected, int):
            return actual == expected
        return abs(_num(actual) - _num(expected)) <= tol
    if isinstance(actual, _MPF):
        return abs(actual - _num(expected)) <= tol
    if isinstance(actual, str):
        return isinstance(expected, str) and normalize_factorization_string(actual) == \
            normalize_factorization_string(expected)
    if isinstance(actual, (list, tuple)):
        if not isinstance(expected, list) or len(expected) != len(actual):
            return False
        return all(_matches(x, y, tol) for x, y in zip(actual, expected))
    if isinstance(actual, dict):
        if not isinstance(expected, dict) or not expected:
            return False
        return all(k in actual and _matches(actual[k], v, tol) for k, v in expected.items())
    return actual == expected


def _sorted_expected(v):
    if isinstance(v, list):
        try:
            return sorted(v)
        except TypeError:
            return v
    return v


def compare(kind, actual, expected, tol):
    if kind == "OrderSpectrumCheck" and isinstance(expected, dict):
        keys = set(expected)
        if not keys or keys - {"includes", "excludes"}:
            return False
        inc, exc = expected.get("includes", []), expected.get("excludes", [])
        if not isinstance(inc, list) or not isinstance(exc, list):
            return False
        return all(m in actual for m in inc) and not any(m in actual for m in exc)
    if kind == "StemExtensionRule" and expected == "unconstrained":
        return actual is None
    if kind in UNORDERED:
        expected = _sorted_expected(expected)
    return matches(actual, expected, tol)


# -- display ---------------------------------------------------------------------------------

def jsonable(v):
    """Deterministic JSON-friendly rendering of an actual or expected value."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v if abs(v) < 2 ** 53 else str(v)
    if isinstance(v, float):
        return v
    if isinstance(v, _MPF):
        return mpmath.nstr(v, 15)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, AbelianInvariants):
        return v.to_list()
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return str(v)
