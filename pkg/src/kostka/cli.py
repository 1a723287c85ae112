"""Command line front end.

Subcommands: `paths` and `rcs` list the two sides of the
correspondence for a spec file, `poly` computes the graded counting
polynomial by up to three independent methods, `map` converts a single
element across the correspondence, `op` applies a raising or lowering
operator to either kind of element, and `check` drives the randomized
and exhaustive property suite.

Exit codes: 0 on success, 1 when a property or cross-method check
fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import rccrystal
from .bijection import extract_letter, insert_letter, path_to_rc, rc_to_path
from .crystal import CrystalSpec, Path
from .paths import enumerate_all_paths, enumerate_paths
from .plactic import tail_energy
from .qpoly import QPolynomial
from .rc import (DEFAULT_BOUND_CAP, RiggedConfiguration, enumerate_rcs,
                 fermionic_polynomial, rc_polynomial, spec_vacancy)

OK = 0
PROPERTY_FAILURE = 1
INPUT_ERROR = 2


class InputError(Exception):
    """Malformed file, spec, or element."""


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f'cannot read {path}: {exc}')
    except json.JSONDecodeError as exc:
        raise InputError(f'{path} is not valid JSON: {exc}')


def _spec_and_weight(data) -> tuple[CrystalSpec, tuple[int, ...]]:
    if not isinstance(data, dict):
        raise InputError('spec must be a JSON object')
    try:
        spec = CrystalSpec.from_json(data)
        weight = tuple(int(x) for x in data['weight'])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f'bad spec: {exc}')
    if len(weight) != spec.n:
        raise InputError(f'weight must have length {spec.n}')
    if any(x < 0 for x in weight):
        raise InputError('weight entries must be nonnegative')
    return spec, weight


def _parse_element(data):
    """A path or rigged configuration, told apart by its fields."""
    if not isinstance(data, dict):
        raise InputError('element must be a JSON object')
    try:
        if 'tableaux' in data:
            return Path.from_json(data)
        if 'nu' in data:
            return RiggedConfiguration.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f'bad element: {exc}')
    raise InputError("element needs a 'tableaux' or 'nu' field")


def _poly_json(poly: QPolynomial) -> dict:
    min_exponent, coefficients = poly.to_list()
    return {'min_exponent': min_exponent, 'coefficients': coefficients}


def cmd_paths(args) -> int:
    spec, weight = _spec_and_weight(_load(args.spec))
    elements = enumerate_paths(spec, weight)
    if args.format == 'json':
        print(json.dumps({'elements': [
            {'path': p.to_json(), 'energy': tail_energy(p)} for p in elements]}))
    else:
        for p in elements:
            print(f'{p}  D={tail_energy(p)}')
    return OK


def cmd_rcs(args) -> int:
    spec, weight = _spec_and_weight(_load(args.spec))
    elements = enumerate_rcs(spec, weight, args.lb_cap)
    if args.format == 'json':
        print(json.dumps({'elements': [
            {'rc': rc.to_json(), 'cocharge': rc.cocharge()} for rc in elements]}))
    else:
        for rc in elements:
            print(f'{rc}  cc={rc.cocharge()}')
    return OK


def _x_polynomial(spec: CrystalSpec, weight) -> QPolynomial:
    result = QPolynomial.zero()
    for p in enumerate_paths(spec, weight):
        result = result + QPolynomial.monomial(tail_energy(p))
    return result


def cmd_poly(args) -> int:
    spec, weight = _spec_and_weight(_load(args.spec))
    names = ['paths', 'rc-enum', 'fermionic'] if args.method == 'all' else [args.method]
    values: dict[str, QPolynomial] = {}
    for name in names:
        if name == 'paths':
            values[name] = _x_polynomial(spec, weight)
        elif name == 'rc-enum':
            values[name] = rc_polynomial(spec, weight, args.lb_cap)
        else:
            values[name] = fermionic_polynomial(spec, weight, args.lb_cap)
    if args.format == 'json':
        print(json.dumps({'polynomials':
                          {name: _poly_json(values[name]) for name in names}}))
    else:
        for name in names:
            print(f'{name}: {values[name]}')
    if len(set(values.values())) > 1:
        detail = '; '.join(f'{name}={values[name]}' for name in names)
        print(f'mismatch for spec {json.dumps(spec.to_json())} '
              f'weight {list(weight)}: {detail}', file=sys.stderr)
        return PROPERTY_FAILURE
    return OK


def _emit_element(element, fmt: str) -> None:
    if element is None:
        print('null' if fmt == 'json' else '(undefined)')
    elif fmt == 'json':
        print(json.dumps(element.to_json()))
    else:
        print(element)


def cmd_map(args) -> int:
    element = _parse_element(_load(args.spec))
    if args.direction == 'phi':
        if not isinstance(element, Path):
            raise InputError('phi expects a path element')
        result = path_to_rc(element)
    else:
        if not isinstance(element, RiggedConfiguration):
            raise InputError('phi-inv expects a rigged configuration element')
        if not element.is_admissible(args.lb_cap):
            raise InputError('configuration is not admissible')
        result = rc_to_path(element)
    _emit_element(result, args.format)
    return OK


def cmd_op(args) -> int:
    element = _parse_element(_load(args.spec))
    a = args.residue
    if isinstance(element, Path):
        result = element.f(a) if args.operator == 'f' else element.e(a)
    else:
        if not element.is_admissible(args.lb_cap):
            raise InputError('configuration is not admissible')
        result = (rccrystal.f if args.operator == 'f' else rccrystal.e)(element, a)
    _emit_element(result, args.format)
    return OK


# ---------------------------------------------------------------------------
# property checker
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def random_spec(rng: random.Random, max_n: int, max_boxes: int) -> CrystalSpec:
    n = rng.randint(2, max_n)
    factors: list[tuple[int, int]] = []
    budget = max_boxes
    while True:
        options = [(r, s) for r in range(1, n) for s in range(1, budget + 1)
                   if r * s <= budget]
        if not options or rng.random() < 0.25:
            break
        choice = rng.choice(options)
        factors.append(choice)
        budget -= choice[0] * choice[1]
    return CrystalSpec(n, tuple(factors))


def sweep_specs(max_n: int, box_cap: int) -> list[CrystalSpec]:
    """Every factor sequence with at most box_cap boxes, every n."""
    out: list[CrystalSpec] = []
    for n in range(2, max_n + 1):
        shapes = [(r, s) for r in range(1, n) for s in range(1, box_cap + 1)
                  if r * s <= box_cap]

        def extend(factors: tuple, used: int):
            out.append(CrystalSpec(n, factors))
            for r, s in shapes:
                if used + r * s <= box_cap:
                    extend(factors + ((r, s),), used + r * s)

        extend((), 0)
    return out


def _phi_by_iteration(rc: RiggedConfiguration, a: int) -> int:
    count = 0
    current = rccrystal.f(rc, a)
    while current is not None:
        count += 1
        current = rccrystal.f(current, a)
    return count


def _check_convexity(spec: CrystalSpec, partitions) -> str | None:
    """Second difference of vacancy numbers against string counts."""
    n = spec.n
    horizon = max((p for comp in partitions for p in comp), default=0) + 1
    counts = []
    for comp in partitions:
        c = [0] * (horizon + 2)
        for p in comp:
            c[p] += 1
        counts.append(c)

    def pv(a, j):
        return 0 if j == 0 else spec_vacancy(spec, partitions, a, j)

    for a in range(1, n):
        for i in range(1, horizon + 1):
            lhs = -pv(a, i - 1) + 2 * pv(a, i) - pv(a, i + 1)
            rhs = -2 * counts[a - 1][i]
            if a - 1 >= 1:
                rhs += counts[a - 2][i]
            if a + 1 <= n - 1:
                rhs += counts[a][i]
            if lhs < rhs:
                return (f'convexity fails at component {a}, length {i}: '
                        f'{lhs} < {rhs} on {partitions}')
    return None


def check_spec(spec: CrystalSpec, cap: int = DEFAULT_BOUND_CAP) -> str | None:
    """Run every cross-property on one spec; None means all hold."""
    n = spec.n
    all_paths = enumerate_all_paths(spec)
    images: dict[Path, RiggedConfiguration] = {}
    by_weight: dict[tuple[int, ...], list[Path]] = {}
    for p in all_paths:
        images[p] = path_to_rc(p)
        by_weight.setdefault(p.weight(), []).append(p)

    if len(set(images.values())) != len(all_paths):
        return 'path-to-rc map is not injective'
    for p, rc in images.items():
        if rc_to_path(rc) != p:
            return f'inverse map failed on {p}'
        if tail_energy(p) != rc.cocharge():
            return f'energy {tail_energy(p)} != cocharge {rc.cocharge()} on {p}'

    class_poly: dict[tuple[int, ...], tuple[tuple[int, ...], QPolynomial]] = {}
    for weight in _compositions(spec.total_boxes(), n):
        group = by_weight.get(weight, [])
        rcs = enumerate_rcs(spec, weight, cap)
        if {images[p] for p in group} != set(rcs):
            return f'image mismatch at weight {weight}'
        x = QPolynomial.zero()
        for p in group:
            x = x + QPolynomial.monomial(tail_energy(p))
        m_enum = rc_polynomial(spec, weight, cap)
        m_ferm = fermionic_polynomial(spec, weight, cap)
        if not (x == m_enum == m_ferm):
            return (f'polynomials disagree at weight {weight}: '
                    f'paths={x}, rc-enum={m_enum}, fermionic={m_ferm}')

        key = tuple(sorted(weight))
        if key in class_poly:
            other_weight, other = class_poly[key]
            if other != m_enum:
                return (f'symmetry broken between weights {other_weight} '
                        f'and {weight}')
        else:
            class_poly[key] = (weight, m_enum)

        for parts in {rc.partitions for rc in rcs}:
            err = _check_convexity(spec, parts)
            if err:
                return err

        for rc in rcs:
            for a in range(1, n):
                if rccrystal.phi(rc, a) != _phi_by_iteration(rc, a):
                    return f'phi closed form disagrees with iteration on {rc}'
            for letter in range(1, n + 1):
                grown = insert_letter(rc, letter)
                if not grown.is_admissible(cap):
                    return f'insertion of {letter} left {rc} inadmissible'
                back, rank = extract_letter(grown)
                if rank != letter or back != rc:
                    return f'insert/extract roundtrip failed on {rc} with {letter}'

    for p in all_paths:
        rc = images[p]
        for a in range(1, n):
            lowered, rc_lowered = p.f(a), rccrystal.f(rc, a)
            if (lowered is None) != (rc_lowered is None):
                return f'lowering at {a} defined on only one side of {p}'
            if lowered is not None and images[lowered] != rc_lowered:
                return f'lowering at {a} does not commute on {p}'
            raised, rc_raised = p.e(a), rccrystal.e(rc, a)
            if (raised is None) != (rc_raised is None):
                return f'raising at {a} defined on only one side of {p}'
            if raised is not None and images[raised] != rc_raised:
                return f'raising at {a} does not commute on {p}'
            if p.phi(a) != rccrystal.phi(rc, a):
                return f'phi at {a} disagrees across the map on {p}'
            if p.epsilon(a) != rccrystal.epsilon(rc, a):
                return f'epsilon at {a} disagrees across the map on {p}'
    return None


def cmd_check(args) -> int:
    if args.max_boxes < 1 or args.max_n < 2 or args.count < 0:
        raise InputError('budget parameters must be positive')
    rng = random.Random(args.seed)
    instances = [random_spec(rng, args.max_n, args.max_boxes)
                 for _ in range(args.count)]
    if args.count > 0:
        instances += sweep_specs(args.max_n, min(4, args.max_boxes))
    rows = []
    failures = 0
    for idx, spec in enumerate(instances):
        detail = check_spec(spec, args.lb_cap)
        if detail is not None:
            failures += 1
        rows.append((idx, spec, detail))
    if args.format == 'json':
        print(json.dumps({'failures': failures, 'instances': [
            {'id': idx, 'n': spec.n,
             'factors': [list(f) for f in spec.factors],
             'status': 'fail' if detail else 'ok',
             **({'detail': detail} if detail else {})}
            for idx, spec, detail in rows]}))
    else:
        for idx, spec, detail in rows:
            factors = json.dumps([list(f) for f in spec.factors])
            status = f'FAIL: {detail}' if detail else 'ok'
            print(f'[{idx}] n={spec.n} factors={factors} {status}')
        verdict = f'{failures} failures' if failures else 'all properties hold'
        print(f'checked {len(rows)} specs: {verdict}')
    return PROPERTY_FAILURE if failures else OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='kostka',
        description='Graded path counting and rigged configurations, '
                    'with the correspondence between them.')
    sub = parser.add_subparsers(dest='command', required=True)

    def add_common(p, default_format='text', spec_help='spec JSON file'):
        p.add_argument('--spec', required=True, metavar='FILE', help=spec_help)
        p.add_argument('--format', choices=['json', 'text'],
                       default=default_format)
        p.add_argument('--lb-cap', type=int, default=DEFAULT_BOUND_CAP,
                       metavar='N', help='bound-tableau enumeration cap')

    p = sub.add_parser('paths', help='list the paths of a weight with energies')
    add_common(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser('rcs', help='list the rigged configurations of a weight '
                                   'with cocharges')
    add_common(p)
    p.set_defaults(func=cmd_rcs)

    p = sub.add_parser('poly', help='compute the graded counting polynomial')
    add_common(p)
    p.add_argument('--method', choices=['paths', 'rc-enum', 'fermionic', 'all'],
                   default='all')
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser('map', help='convert one element across the correspondence')
    p.add_argument('direction', choices=['phi', 'phi-inv'])
    add_common(p, default_format='json', spec_help='element JSON file')
    p.set_defaults(func=cmd_map)

    p = sub.add_parser('op', help='apply a crystal operator to an element')
    p.add_argument('operator', choices=['f', 'e'])
    p.add_argument('residue', type=int)
    add_common(p, default_format='json', spec_help='element JSON file')
    p.set_defaults(func=cmd_op)

    p = sub.add_parser('check', help='run the property suite on generated specs')
    p.add_argument('--max-boxes', type=int, default=6, metavar='N')
    p.add_argument('--max-n', type=int, default=4, metavar='N')
    p.add_argument('--seed', type=int, default=0, metavar='N')
    p.add_argument('--count', type=int, default=50, metavar='N',
                   help='number of random specs (0 checks nothing)')
    p.add_argument('--format', choices=['json', 'text'], default='text')
    p.add_argument('--lb-cap', type=int, default=DEFAULT_BOUND_CAP, metavar='N')
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return INPUT_ERROR
    except (ValueError, RuntimeError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return INPUT_ERROR


if __name__ == '__main__':
    raise SystemExit(main())
