"""Command-line interface.

Subcommands
-----------
``bases``     list registered basis families, their parameters, and registry
              functions.
``expand``    coefficient table of a function in a basis, CSV or JSON.
``converge``  partial-sum error table over a list of ranks.
``verify``    run the projection-algebra, biorthogonality, vector/scalar and
              integral-bound suites; JSON report, exit 0 iff everything
              passes.

Exit codes: 0 success, 1 numeric failure (diagnostic JSON on stdout) or a
failed verification, 2 usage and validation errors.  All output is
deterministic: fixed seeds (``--seed`` / SCHAUDER_SEED), sorted JSON keys,
shortest round-trip float formatting, no timestamps.
"""

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import registry
from .basis_core import (
    biorthogonality_matrix,
    coefficient_sweep,
    convergence_report,
    semigroup_max_discrepancy,
    vector_scalar_consistency,
)
from .errors import InputError, NumericError
from .functions import SampledFunction, central_difference_bundle
from .interval_bases import CkBasis, DenseSequence, HaarBasis, HatBasis
from .quadrature import integral_bound_check
from .spectral_bases import FourierBasis, HermiteBasis, TaylorBasis
from .value_space import SeminormSpec, ValueSpace

BASIS_SCHEMAS = {
    "haar": {"params": {}, "doc": "Haar steps on [0,1], indexed from 1"},
    "hat-dyadic": {
        "params": {"levels": "dyadic refinement depth (default 11)"},
        "doc": "piecewise-linear hats over the dyadic point sequence",
    },
    "ck-dyadic": {
        "params": {"k": "smoothness order (default 2)",
                   "levels": "dyadic refinement depth (default 11)"},
        "doc": "C^k family: jets at 0, then k-fold antiderivatives of hats",
    },
    "hermite": {
        "params": {"n_max": "largest degree (default 64)",
                   "quad_size": "Gauss-Hermite size override"},
        "doc": "normalized Hermite functions on the line",
    },
    "fourier": {
        "params": {"n_max": "largest mode (default 32)",
                   "grid_size": "rectangle-rule size override"},
        "doc": "exponential modes on [-pi, pi]",
    },
    "taylor": {
        "params": {"center": "expansion point (re or [re, im], default 0)",
                   "radius": "disc radius (default inf)",
                   "contour_radius": "averaging circle radius (default 1)",
                   "n_max": "largest order (default 16)",
                   "contour_points": "contour size override (power of 2)"},
        "doc": "Taylor monomials with contour-average coefficients",
    },
}


def _build_basis_inner(name, params):
    if name == "haar":
        return HaarBasis()
    if name == "hat-dyadic":
        return HatBasis(DenseSequence.dyadic(int(params.pop("levels", 11))))
    if name == "ck-dyadic":
        return CkBasis(k=int(params.pop("k", 2)),
                       seq=DenseSequence.dyadic(int(params.pop("levels", 11))))
    if name == "hermite":
        return HermiteBasis(n_max=int(params.pop("n_max", 64)),
                            quad_size=params.pop("quad_size", None))
    if name == "fourier":
        return FourierBasis(n_max=int(params.pop("n_max", 32)),
                            grid_size=params.pop("grid_size", None))
    if name == "taylor":
        center = params.pop("center", 0.0)
        if isinstance(center, (list, tuple)):
            center = complex(center[0], center[1])
        elif isinstance(center, dict):
            # same shape the JSON emitter uses for complex values
            center = complex(center.get("re", 0.0), center.get("im", 0.0))
        return TaylorBasis(center=center,
                           radius=float(params.pop("radius", np.inf)),
                           contour_radius=float(params.pop("contour_radius", 1.0)),
                           n_max=int(params.pop("n_max", 16)),
                           contour_points=params.pop("contour_points", None))
    return None


def build_basis(name, params=None):
    """Construct a registered basis family from a parameter mapping."""
    params = dict(params or {})
    try:
        basis = _build_basis_inner(name, params)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad parameters for basis {name!r}: {exc}")
    if basis is None:
        raise InputError(
            f"unknown basis {name!r}; known: {', '.join(sorted(BASIS_SCHEMAS))}"
        )
    if params:
        # a typo here would otherwise change the math silently
        raise InputError(
            f"unknown parameter(s) for basis {name!r}: {', '.join(sorted(params))}; "
            f"known: {', '.join(sorted(BASIS_SCHEMAS[name]['params'])) or 'none'}"
        )
    return basis


def resolve_function(spec_value, basis=None):
    """Turn a --fn value into a handle: registry name, stack, or sample file."""
    if isinstance(spec_value, (list, tuple)):
        return registry.vector_stack([resolve_function(s) for s in spec_value])
    if isinstance(spec_value, str) and os.path.exists(spec_value):
        sampled = _load_samples(spec_value)
        if isinstance(basis, CkBasis):
            return central_difference_bundle(sampled, basis.k)
        return sampled
    if isinstance(spec_value, str) and "," in spec_value:
        return registry.vector_stack(
            [resolve_function(s.strip()) for s in spec_value.split(",")]
        )
    return registry.get(spec_value)


def _load_samples(path):
    with open(path) as fh:
        if path.endswith(".json"):
            data = json.load(fh)
            try:
                return SampledFunction(data["x"], data["values"])
            except (KeyError, TypeError) as exc:
                raise InputError(f"malformed sample file {path}: {exc}")
        rows = list(csv.reader(fh))
    body = rows[1:] if rows and not _is_number(rows[0][0]) else rows
    try:
        xs = [float(r[0]) for r in body]
        vals = [[float(c) for c in r[1:]] for r in body]
    except (ValueError, IndexError) as exc:
        raise InputError(f"malformed sample file {path}: {exc}")
    vals = [v[0] for v in vals] if all(len(v) == 1 for v in vals) else vals
    return SampledFunction(xs, vals)


def _is_number(s):
    try:
        float(s)
        return True
    except ValueError:
        return False


def build_value_space(cfg, basis):
    if cfg:
        seminorms = [
            SeminormSpec(s["kind"], tuple(s["weights"]) if s.get("weights") else None)
            for s in cfg.get("seminorms", [{"kind": "sup"}])
        ]
        return ValueSpace(int(cfg.get("dimension", 1)),
                          field=cfg.get("field", basis.field),
                          seminorms=seminorms)
    return ValueSpace(1, field=basis.field)


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def _fmt(v):
    """Shortest round-trip decimal for floats; exact text for ints."""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _py(obj):
    """Recursively convert numpy scalars/arrays for JSON emission."""
    if isinstance(obj, dict):
        return {k: _py(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_py(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_py(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.complexfloating, complex)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    return obj


def _index_columns(idx):
    return list(idx) if isinstance(idx, tuple) else [idx]


def _value_columns(value):
    value = np.atleast_1d(np.asarray(value))
    cols = []
    for v in value:
        if np.iscomplexobj(value):
            cols.extend([v.real, v.imag])
        else:
            cols.append(v)
    return cols


def _coefficient_table(basis, rows_of):
    """(header, rows) for a coefficient sweep."""
    first_idx, first_val = rows_of[0]
    dim = len(_index_columns(first_idx))
    head = ["n"] if dim == 1 else [f"n{i + 1}" for i in range(dim)]
    val = np.atleast_1d(np.asarray(first_val))
    width = val.shape[0]
    complex_vals = np.iscomplexobj(val)
    for i in range(width):
        tag = f"_{i}" if width > 1 else ""
        if complex_vals:
            head.extend([f"re{tag}", f"im{tag}"])
        else:
            head.append(f"value{tag}")
    rows = []
    for idx, value in rows_of:
        rows.append(_index_columns(idx) + _value_columns(value))
    return head, rows


def _emit_csv(header, rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(c) for c in row])


def _emit(payload_json, csv_pair, fmt, output):
    if fmt == "json":
        text = json.dumps(_py(payload_json), sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        _emit_csv(csv_pair[0], csv_pair[1], buf)
        text = buf.getvalue()
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_bases(args):
    payload = {
        "bases": BASIS_SCHEMAS,
        "functions": registry.describe(),
    }
    text = json.dumps(_py(payload), sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_expand(args, cfg):
    basis = build_basis(args.basis, cfg.get("basis_params"))
    f = resolve_function(args.fn, basis)
    sweep = coefficient_sweep(basis, f, args.max_n)
    if not sweep:
        raise InputError(f"no indices of grade <= {args.max_n}")
    header, rows = _coefficient_table(basis, sweep)
    payload = {
        "command": "expand",
        "basis": args.basis,
        "fn": args.fn,
        "max_n": args.max_n,
        "coefficients": [
            {"index": _index_columns(i), "value": np.atleast_1d(v)}
            for i, v in sweep
        ],
    }
    _emit(payload, (header, rows), args.format, args.output)
    return 0


def _cmd_converge(args, cfg):
    basis = build_basis(args.basis, cfg.get("basis_params"))
    f = resolve_function(args.fn, basis)
    space = build_value_space(cfg.get("value_space"), basis)
    mode = {"sup": ("sup", 1), "l1": ("lp", 1), "l2": ("lp", 2)}[args.mode]
    report = convergence_report(basis, f, args.ranks, space=space,
                                mode=mode[0], p=mode[1])
    labels = space.seminorm_labels()
    header = ["k"] + [f"err_{lab}" for lab in labels]
    rows = [[k] + list(errs) for k, errs in report]
    payload = {
        "command": "converge",
        "basis": args.basis,
        "fn": args.fn,
        "mode": args.mode,
        "errors": [{"k": int(k), "values": errs} for k, errs in report],
        "seminorms": labels,
    }
    _emit(payload, (header, rows), args.format, args.output)
    return 0


VERIFY_BASES = ("haar", "hat-dyadic", "ck-dyadic", "hermite", "fourier", "taylor")


def _verify_basis(name, max_n, rng):
    basis = build_basis(name, {
        "hermite": {"n_max": max_n},
        "fourier": {"n_max": max_n},
        "taylor": {"n_max": max_n},
    }.get(name))
    corpus = registry.corpus(basis.name)
    tol_semigroup = 1e-10
    worst_name, worst = "", 0.0
    for fname, f in corpus:
        d = semigroup_max_discrepancy(basis, f, max_n)
        if d > worst:
            worst_name, worst = fname, d
    count = min(max_n, 20)
    bio = biorthogonality_matrix(basis, count)
    bio_gap = float(np.max(np.abs(bio - np.eye(count))))
    bio_tol = max(basis.coefficient_tol, 1e-12)
    stack = registry.vector_stack([f for _, f in corpus[:3]])
    vs_worst = 0.0
    for n in basis.indices(min(max_n, 8)):
        vs_worst = max(vs_worst, vector_scalar_consistency(basis, stack, n, 3))
    checks = {
        "projection_algebra": {
            "max_discrepancy": worst, "worst_function": worst_name,
            "tol": tol_semigroup, "pass": worst <= tol_semigroup,
        },
        "biorthogonality": {
            "count": count, "max_gap": bio_gap, "tol": bio_tol,
            "pass": bio_gap <= bio_tol,
        },
        "vector_scalar": {
            "components": 3, "max_gap": vs_worst, "tol": 1e-12,
            "pass": vs_worst <= 1e-12,
        },
    }
    return checks


def _verify_integral_bound(rng, trials=25):
    space = ValueSpace(2, seminorms=(
        SeminormSpec("sup"), SeminormSpec("euclidean"),
        SeminormSpec("weighted-sup", (2.0, 1.0)),
    ))
    worst = -np.inf
    for _ in range(trials):
        npts = int(rng.integers(3, 40))
        nodes = np.sort(rng.uniform(-1.0, 2.0, npts))
        weights = rng.uniform(0.01, 1.0, npts)
        a, b, c = rng.uniform(-2.0, 2.0, 3)

        def f(x, a=a, b=b, c=c):
            x = np.asarray(x)
            return np.stack([a * np.sin(x) + b * x, c * np.cos(2 * x)], axis=-1)

        rep = integral_bound_check(f, nodes, weights, space)
        worst = max(worst, float(np.max(rep.lhs - rep.rhs)))
    return {
        "trials": trials, "max_violation": worst, "slack": 1e-12,
        "pass": worst <= 1e-12,
    }


def _cmd_verify(args, cfg):
    seed = args.seed if args.seed is not None else int(
        os.environ.get("SCHAUDER_SEED", "0")
    )
    rng = np.random.default_rng(seed)
    names = [args.basis] if args.basis else list(VERIFY_BASES)
    for n in names:
        if n not in BASIS_SCHEMAS:
            raise InputError(f"unknown basis {n!r}")
    report = {"command": "verify", "seed": seed, "max_n": args.max_n,
              "bases": {}, "quadrature": {}}
    for name in names:
        report["bases"][name] = _verify_basis(name, args.max_n, rng)
    report["quadrature"]["integral_bound"] = _verify_integral_bound(rng)
    ok = all(
        chk["pass"]
        for per_basis in report["bases"].values()
        for chk in per_basis.values()
    ) and report["quadrature"]["integral_bound"]["pass"]
    report["pass"] = ok
    text = json.dumps(_py(report), sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _parse_ranks(text):
    try:
        ranks = [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise InputError(f"bad rank list {text!r}; expected e.g. 1,2,4,8")
    if not ranks or any(r < 0 for r in ranks):
        raise InputError("ranks must be nonnegative integers")
    return ranks


def make_parser():
    parser = argparse.ArgumentParser(
        prog="schauder",
        description="Basis expansions with verified projection algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bases", help="list basis families and functions")
    p.add_argument("--output")

    for cmd in ("expand", "converge"):
        p = sub.add_parser(cmd)
        p.add_argument("--basis")
        p.add_argument("--fn",
                       help="registry name, comma list (vector), or sample file")
        p.add_argument("--config", help="JSON job configuration file")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--output")
        if cmd == "expand":
            p.add_argument("--max-n", type=int, dest="max_n")
        else:
            p.add_argument("--ranks")
            p.add_argument("--mode", choices=("sup", "l1", "l2"))

    p = sub.add_parser("verify", help="run the module property suites")
    p.add_argument("--basis")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--seed", type=int)
    p.add_argument("--config")
    p.add_argument("--output")
    return parser


_DEFAULTS = {"format": "csv", "max_n_expand": 8, "max_n_verify": 16,
             "ranks": "1,2,4,8,16", "mode": "sup"}


def _merge_config(args, parser):
    """Layer values: explicit flag > config file > built-in default."""
    cfg = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise InputError("job configuration must be a JSON object")
    basis_cfg = cfg.get("basis")
    if isinstance(basis_cfg, dict):
        # both inline ({"name": ..., "center": ...}) and nested
        # ({"name": ..., "params": {...}}) spellings are accepted
        extra = {k: v for k, v in basis_cfg.items() if k != "name"}
        nested = extra.pop("params", None)
        if isinstance(nested, dict):
            extra.update(nested)
        cfg.setdefault("basis_params", extra)
        basis_cfg = basis_cfg.get("name")
    for key, value in (("basis", basis_cfg), ("fn", cfg.get("fn")),
                       ("format", cfg.get("format")), ("mode", cfg.get("mode")),
                       ("output", cfg.get("output"))):
        if getattr(args, key, None) is None and value is not None:
            setattr(args, key, value)
    if getattr(args, "max_n", None) is None and "max_n" in cfg:
        args.max_n = int(cfg["max_n"])
    if getattr(args, "ranks", None) is None and "ranks" in cfg:
        args.ranks = ",".join(str(r) for r in cfg["ranks"])
    if hasattr(args, "format") and args.format is None:
        args.format = _DEFAULTS["format"]
    if hasattr(args, "mode") and args.mode is None:
        args.mode = _DEFAULTS["mode"]
    if hasattr(args, "ranks") and args.ranks is None:
        args.ranks = _DEFAULTS["ranks"]
    if getattr(args, "max_n", None) is None and hasattr(args, "max_n"):
        args.max_n = (_DEFAULTS["max_n_verify"] if args.command == "verify"
                      else _DEFAULTS["max_n_expand"])
    if args.command in ("expand", "converge"):
        if not getattr(args, "basis", None):
            raise InputError("--basis is required (flag or config)")
        if not getattr(args, "fn", None):
            raise InputError("--fn is required (flag or config)")
    return cfg


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge_config(args, parser)
        if args.command == "bases":
            return _cmd_bases(args)
        if args.command == "expand":
            return _cmd_expand(args, cfg)
        if args.command == "converge":
            args.ranks = _parse_ranks(args.ranks)
            return _cmd_converge(args, cfg)
        if args.command == "verify":
            return _cmd_verify(args, cfg)
        parser.error(f"unknown command {args.command!r}")
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except NumericError as exc:
        diagnostic = {"error": "numeric", "message": str(exc), "node": _py(exc.node)}
        sys.stdout.write(json.dumps(diagnostic, sort_keys=True) + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
