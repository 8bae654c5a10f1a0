"""Builders for the three concrete model families, plus the bundled fixtures.

* ``build_table`` encodes an arbitrary finite algebra extensionally; nothing
  is assumed about it, the caller runs the checks.
* ``build_propositional`` encodes classical propositional logic over a small
  atom set.  A theory is represented by its set of models (valuations), so
  consequence closure is implicit and exact; note the order reversal this
  brings: a larger theory has a *smaller* model set, and the illegitimate
  state (the inconsistent theory) is the EMPTY valuation set.  Asserting a
  formula intersects the model set with the formula's models.
* ``build_ray`` builds the exact rational ray model: states are canonical
  rays of Q^n plus the zero ray, measurements are orthogonal projections
  onto rational subspaces.
"""

from __future__ import annotations

import itertools

from . import formulas
from .core import FiniteAlgebra, ProjectionMeasurement, RayAlgebra, TableMeasurement, extent
from .errors import InputError
from .ratlin import Subspace, format_rational, mat_mul, rational

MAX_ATOMS = 3


def build_table(states, zero, measurements, negations=None, kind="table", meta=None):
    """Finite algebra from explicit tables.  No law is assumed to hold."""
    states = list(states)
    if len(set(states)) != len(states):
        dupe = next(s for s in states if states.count(s) > 1)
        raise InputError(f"duplicate state id {dupe!r}")
    if zero not in states:
        raise InputError(f"zero state {zero!r} is not among the states")
    table_measurements = []
    for name in measurements:
        table = measurements[name]
        missing = [s for s in states if s not in table]
        if missing:
            raise InputError(f"measurement {name!r} has no entry for state {missing[0]!r}")
        extra = [s for s in table if s not in states]
        if extra:
            raise InputError(f"measurement {name!r} maps unknown state {extra[0]!r}")
        bad = [s for s in states if table[s] not in states]
        if bad:
            raise InputError(
                f"measurement {name!r} sends {bad[0]!r} to unknown state {table[bad[0]]!r}"
            )
        table_measurements.append(TableMeasurement(name, {s: table[s] for s in states}))
    alg = FiniteAlgebra(kind, states, zero, table_measurements,
                        negation_hints=negations, meta=meta)
    if negations:
        _validate_negations(alg, negations)
    return alg


def _validate_negations(alg, negations):
    for name, other in negations.items():
        m = alg.measurement(name)
        n = alg.measurement(other)
        if negations.get(other, name) != name:
            raise InputError(f"negation map is not an involution at {name!r}")
        fp_m, z_m, _ = extent(alg, m)
        fp_n, z_n, _ = extent(alg, n)
        if fp_n.members != z_m.members or z_n.members != fp_m.members:
            raise InputError(
                f"declared negation {other!r} of {name!r} does not swap "
                "fixpoints and zeros"
            )


def _valuation_name(bits: tuple[int, ...]) -> str:
    return "v" + "".join(str(b) for b in bits)


def _theory_id(mask: int, valuation_names: list[str]) -> str:
    members = [valuation_names[i] for i in range(len(valuation_names)) if mask >> i & 1]
    return "{" + ",".join(members) + "}"


def build_propositional(atoms, variant="all_theories"):
    """Propositional algebra over at most three atoms.

    ``all_theories`` takes every theory (= every set of valuations) as a
    state; ``maximal_theories`` keeps only the maximal consistent theories
    (singleton model sets) and the inconsistent theory (the empty set).
    Measurements are one per semantic equivalence class of formulas and act
    by model-set intersection; their names are minimal formulas, except for
    the two trivial classes which are named ``top`` and ``bot``.
    """
    atoms = tuple(atoms)
    if not 1 <= len(atoms) <= MAX_ATOMS:
        raise InputError(
            f"propositional models support 1 to {MAX_ATOMS} atoms, got {len(atoms)}"
        )
    if len(set(atoms)) != len(atoms):
        raise InputError("atom names must be unique")
    if variant not in ("all_theories", "maximal_theories"):
        raise InputError(f"unknown variant {variant!r}")

    k = len(atoms)
    n_valuations = 1 << k
    valuation_names = [
        _valuation_name(bits) for bits in itertools.product((0, 1), repeat=k)
    ]
    full = (1 << n_valuations) - 1

    if variant == "all_theories":
        state_masks = list(range(1 << n_valuations))
    else:
        state_masks = [0] + [1 << i for i in range(n_valuations)]
    ids = {mask: _theory_id(mask, valuation_names) for mask in state_masks}

    names_by_mask = {}
    for mask, formula in formulas.minimal_formula_names(atoms).items():
        names_by_mask[mask] = formulas.format_formula(formula, compact=True)
    names_by_mask[full] = "top"
    names_by_mask[0] = "bot"

    measurements = {}
    negations = {}
    for model_mask in range(1 << n_valuations):
        name = names_by_mask[model_mask]
        table = {ids[t]: ids[t & model_mask] for t in state_masks}
        measurements[name] = table
        negations[name] = names_by_mask[full ^ model_mask]

    return build_table(
        states=[ids[m] for m in state_masks],
        zero=ids[0],
        measurements=measurements,
        negations=negations,
        kind="propositional",
        meta={"atoms": list(atoms), "variant": variant,
              "valuations": valuation_names,
              "model_masks": {name: mask for mask, name in names_by_mask.items()}},
    )


def measurement_for(alg: FiniteAlgebra, text: str):
    """Measurement of a propositional algebra matching a formula text."""
    if alg.kind != "propositional":
        raise InputError("formula lookup needs a propositional algebra")
    atoms = tuple(alg.meta["atoms"])
    f = formulas.parse_formula(text)
    unknown = [s for s in formulas.slots_of(f) if s not in atoms]
    if unknown:
        raise InputError(f"unknown atom {unknown[0]!r}")
    mask = 0
    k = len(atoms)
    for row in range(1 << k):
        env = {a: bool(row >> (k - 1 - j) & 1) for j, a in enumerate(atoms)}
        if formulas.evaluate(f, env):
            mask |= 1 << row
    by_mask = {m: name for name, m in alg.meta["model_masks"].items()}
    return alg.measurement(by_mask[mask])


def build_ray(dimension, subspaces, full_lattice=False, sample_height=3):
    """Ray algebra from named subspace generator lists.

    Without ``full_lattice`` the listed family must be closed under
    orthocomplement and under composition of commuting pairs; the error
    names the missing subspace.
    """
    if dimension < 1:
        raise InputError("dimension must be positive")
    if sample_height < 1:
        raise InputError("sample height must be at least 1")
    measurements = []
    by_subspace: dict[Subspace, str] = {}
    for name, generators in subspaces.items():
        sub = Subspace.from_generators(dimension, generators)
        if sub in by_subspace:
            raise InputError(
                f"subspaces {by_subspace[sub]!r} and {name!r} have the same span"
            )
        by_subspace[sub] = name
        measurements.append(ProjectionMeasurement(name, sub))

    if not full_lattice:
        for m in measurements:
            perp = m.subspace.orthocomplement
            if perp not in by_subspace:
                raise InputError(
                    f"listed family is not closed: the orthocomplement {perp} "
                    f"of {m.name!r} is missing"
                )
        for a, b in itertools.combinations(measurements, 2):
            pa, pb = a.subspace.projection, b.subspace.projection
            prod = mat_mul(pa, pb)
            if prod != mat_mul(pb, pa):
                continue
            inter = a.subspace.intersect(b.subspace)
            if inter not in by_subspace:
                raise InputError(
                    f"listed family is not closed: {a.name!r} and {b.name!r} "
                    f"commute but their composition {inter} is missing"
                )

    return RayAlgebra(dimension, measurements, full_lattice=full_lattice,
                      sample_height=sample_height)


def sample_states(alg: RayAlgebra, height: int):
    """Deterministic ray window of the given height; larger heights nest."""
    if not isinstance(alg, RayAlgebra):
        raise InputError("sampling applies to ray algebras")
    return alg.sample_states(height)


# ---------------------------------------------------------------------------
# bundled fixtures


def fixture_f1() -> FiniteAlgebra:
    """Two states, two measurements: the smallest nontrivial table algebra."""
    return build_table(
        states=["0", "a"],
        zero="0",
        measurements={"top": {"0": "0", "a": "a"}, "bot": {"0": "0", "a": "0"}},
    )


def fixture_t2() -> FiniteAlgebra:
    """All theories over two atoms: 16 states, 16 measurements."""
    return build_propositional(["p", "q"], "all_theories")


def fixture_t2_maximal() -> FiniteAlgebra:
    """Maximal consistent theories over two atoms, plus the inconsistent one."""
    return build_propositional(["p", "q"], "maximal_theories")


_R2_SUBSPACES = {
    "bot": [],
    "px": [["1", "0"]],
    "py": [["0", "1"]],
    "pd": [["1", "1"]],
    "pdp": [["1", "-1"]],
    "top": [["1", "0"], ["0", "1"]],
}

# The two extra lines pe/pep are forced by closure: the diagonal plane pdp
# commutes with the xy plane and their composition is the anti-diagonal line.
_R3_SUBSPACES = {
    "bot": [],
    "px": [["1", "0", "0"]],
    "py": [["0", "1", "0"]],
    "pz": [["0", "0", "1"]],
    "pxy": [["1", "0", "0"], ["0", "1", "0"]],
    "pxz": [["1", "0", "0"], ["0", "0", "1"]],
    "pyz": [["0", "1", "0"], ["0", "0", "1"]],
    "pd": [["1", "1", "0"]],
    "pdp": [["1", "-1", "0"], ["0", "0", "1"]],
    "pe": [["1", "-1", "0"]],
    "pep": [["1", "1", "0"], ["0", "0", "1"]],
    "top": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
}


def fixture_r2(full_lattice=False) -> RayAlgebra:
    """Plane model: the axes, both diagonals, zero and the full plane."""
    return build_ray(2, _R2_SUBSPACES, full_lattice=full_lattice)


def fixture_r2_full() -> RayAlgebra:
    return fixture_r2(full_lattice=True)


def fixture_r3(full_lattice=False) -> RayAlgebra:
    """Space model: axes, coordinate planes, both diagonal lines in the xy
    plane and their complements, zero and the full space."""
    return build_ray(3, _R3_SUBSPACES, full_lattice=full_lattice)


def fixture_r3_full() -> RayAlgebra:
    return fixture_r3(full_lattice=True)


FIXTURES = {
    "f1": fixture_f1,
    "t2": fixture_t2,
    "t2_maximal": fixture_t2_maximal,
    "r2": fixture_r2,
    "r2_full": fixture_r2_full,
    "r3": fixture_r3,
    "r3_full": fixture_r3_full,
}


# ---------------------------------------------------------------------------
# model files


def load_model(data: dict):
    """Build an algebra from the structured model-file form."""
    if not isinstance(data, dict):
        raise InputError("model file must hold an object")
    kind = data.get("kind")
    if kind == "table":
        _require(data, "states", list)
        _require(data, "measurements", dict)
        if "zero" not in data:
            raise InputError("table model needs a \"zero\" entry")
        return build_table(
            states=data["states"],
            zero=data["zero"],
            measurements=data["measurements"],
            negations=data.get("negations"),
        )
    if kind == "ray":
        _require(data, "dimension", int)
        _require(data, "subspaces", dict)
        return build_ray(
            dimension=data["dimension"],
            subspaces={
                name: [[rational(x) for x in vec] for vec in vectors]
                for name, vectors in data["subspaces"].items()
            },
            full_lattice=bool(data.get("full_lattice", False)),
            sample_height=int(data.get("sample_height", 3)),
        )
    if kind == "propositional":
        _require(data, "atoms", list)
        return build_propositional(
            atoms=data["atoms"],
            variant=data.get("variant", "all_theories"),
        )
    raise InputError(f"unknown model kind {kind!r}")


def _require(data, key, expected_type):
    if key not in data:
        raise InputError(f"model file lacks the {key!r} entry")
    if not isinstance(data[key], expected_type):
        raise InputError(f"model entry {key!r} has the wrong shape")


def dump_model(alg) -> dict:
    """Serialize an algebra back to the model-file form."""
    if isinstance(alg, RayAlgebra):
        return {
            "kind": "ray",
            "dimension": alg.dim,
            "full_lattice": alg.full_lattice,
            "sample_height": alg.sample_height,
            "subspaces": {
                m.name: [[format_rational(rational(x)) for x in row]
                         for row in m.subspace.basis]
                for m in alg.sorted_measurements()
            },
        }
    if alg.kind == "propositional":
        return {
            "kind": "propositional",
            "atoms": list(alg.meta["atoms"]),
            "variant": alg.meta["variant"],
        }
    out = {
        "kind": "table",
        "states": list(alg.states),
        "zero": alg.zero,
        "measurements": {
            m.name: dict(m.mapping) for m in alg.sorted_measurements()
        },
    }
    if alg.negation_hints:
        out["negations"] = dict(alg.negation_hints)
    return out
