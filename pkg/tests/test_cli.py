import json
import random

from kostka.cli import main, random_spec, sweep_specs
from kostka.crystal import CrystalSpec, Path
from kostka.rc import RiggedConfiguration
from kostka import rccrystal

SPEC43 = {'n': 4, 'factors': [[2, 2], [2, 1]], 'weight': [2, 2, 1, 1]}
TWO_BOX = {'n': 2, 'factors': [[1, 1], [1, 1]], 'weight': [1, 1]}
EMPTY = {'n': 3, 'factors': [], 'weight': [0, 0, 0]}

EXB_PATH_JSON = {'n': 6, 'factors': [[1, 1], [2, 1], [2, 3]],
                 'tableaux': [[[3]], [[1], [2]], [[1, 2, 3], [4, 5, 6]]]}
EXB_RC_JSON = {'n': 6, 'weight': [2, 2, 2, 1, 1, 1],
               'factors': [[1, 1], [2, 1], [2, 3]],
               'nu': [[[2, -1], [1, 0]], [[3, 0], [1, -1], [1, -1]],
                      [[3, 0]], [[2, -1]], [[1, -1]]]}


def write(tmp_path, name, data):
    target = tmp_path / name
    target.write_text(json.dumps(data))
    return str(target)


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_paths_text(tmp_path, capsys):
    code, out, _ = run(capsys, ['paths', '--spec', write(tmp_path, 's.json', SPEC43)])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    energies = sorted(int(line.rsplit('D=', 1)[1]) for line in lines)
    assert energies == [0, 0, 1, 1, 1, 1, 2]


def test_paths_json(tmp_path, capsys):
    code, out, _ = run(capsys, ['paths', '--spec',
                                write(tmp_path, 's.json', SPEC43),
                                '--format', 'json'])
    assert code == 0
    data = json.loads(out)
    assert len(data['elements']) == 7
    for el in data['elements']:
        p = Path.from_json(el['path'])
        assert p.weight() == (2, 2, 1, 1)
    assert sorted(el['energy'] for el in data['elements']) == [0, 0, 1, 1, 1, 1, 2]


def test_rcs_text(tmp_path, capsys):
    code, out, _ = run(capsys, ['rcs', '--spec', write(tmp_path, 's.json', SPEC43)])
    assert code == 0
    assert set(out.splitlines()) == {
        '1:0 | 1:-1,1:-1 | 1:0  cc=0',
        '1:-1 | 1:0,1:0 | 1:0  cc=1',
        '1:0 | 1:0,1:0 | 1:-1  cc=1',
        '1:0 | 1:0,1:-1 | 1:0  cc=1',
        '1:0 | 1:0,1:0 | 1:0  cc=2',
        '1:-1 | 2:0 | 1:-1  cc=0',
        '1:-1 | 2:1 | 1:-1  cc=1',
    }


def test_rcs_empty_spec(tmp_path, capsys):
    code, out, _ = run(capsys, ['rcs', '--spec', write(tmp_path, 's.json', EMPTY)])
    assert code == 0
    assert out.splitlines() == ['(empty)  cc=0']


def test_rcs_respects_cap(tmp_path, capsys):
    code, _, err = run(capsys, ['rcs', '--spec', write(tmp_path, 's.json', SPEC43),
                                '--lb-cap', '3'])
    assert code == 2
    assert 'exceed the cap' in err


def test_poly_all(tmp_path, capsys):
    code, out, _ = run(capsys, ['poly', '--spec', write(tmp_path, 's.json', SPEC43)])
    assert code == 0
    assert out.splitlines() == ['paths: 2 + 4*q + q^2',
                                'rc-enum: 2 + 4*q + q^2',
                                'fermionic: 2 + 4*q + q^2']


def test_poly_two_box(tmp_path, capsys):
    code, out, _ = run(capsys, ['poly', '--spec', write(tmp_path, 's.json', TWO_BOX)])
    assert code == 0
    assert out.splitlines() == ['paths: 1 + q', 'rc-enum: 1 + q', 'fermionic: 1 + q']


def test_poly_empty_spec(tmp_path, capsys):
    code, out, _ = run(capsys, ['poly', '--spec', write(tmp_path, 's.json', EMPTY)])
    assert code == 0
    assert out.splitlines() == ['paths: 1', 'rc-enum: 1', 'fermionic: 1']


def test_poly_single_method(tmp_path, capsys):
    code, out, _ = run(capsys, ['poly', '--spec', write(tmp_path, 's.json', SPEC43),
                                '--method', 'fermionic'])
    assert code == 0
    assert out.splitlines() == ['fermionic: 2 + 4*q + q^2']


def test_poly_json(tmp_path, capsys):
    code, out, _ = run(capsys, ['poly', '--spec', write(tmp_path, 's.json', SPEC43),
                                '--format', 'json'])
    assert code == 0
    polys = json.loads(out)['polynomials']
    assert set(polys) == {'paths', 'rc-enum', 'fermionic'}
    for value in polys.values():
        assert value == {'min_exponent': 0, 'coefficients': [2, 4, 1]}


def test_map_phi(tmp_path, capsys):
    code, out, _ = run(capsys, ['map', 'phi', '--spec',
                                write(tmp_path, 'b.json', EXB_PATH_JSON)])
    assert code == 0
    assert RiggedConfiguration.from_json(json.loads(out)) == \
        RiggedConfiguration.from_json(EXB_RC_JSON)


def test_map_phi_inv(tmp_path, capsys):
    code, out, _ = run(capsys, ['map', 'phi-inv', '--spec',
                                write(tmp_path, 'rc.json', EXB_RC_JSON)])
    assert code == 0
    assert Path.from_json(json.loads(out)) == Path.from_json(EXB_PATH_JSON)


def test_map_text_format(tmp_path, capsys):
    code, out, _ = run(capsys, ['map', 'phi', '--spec',
                                write(tmp_path, 'b.json', EXB_PATH_JSON),
                                '--format', 'text'])
    assert code == 0
    assert out.strip() == '2:-1,1:0 | 3:0,1:-1,1:-1 | 3:0 | 2:-1 | 1:-1'


def test_map_empty_path(tmp_path, capsys):
    element = {'n': 3, 'factors': [], 'tableaux': []}
    code, out, _ = run(capsys, ['map', 'phi', '--spec',
                                write(tmp_path, 'p.json', element)])
    assert code == 0
    data = json.loads(out)
    assert data['weight'] == [0, 0, 0]
    assert data['nu'] == [[], []]


def test_map_rejects_wrong_kind(tmp_path, capsys):
    rc_file = write(tmp_path, 'rc.json', EXB_RC_JSON)
    path_file = write(tmp_path, 'p.json', EXB_PATH_JSON)
    code, _, err = run(capsys, ['map', 'phi', '--spec', rc_file])
    assert code == 2 and err.startswith('error:')
    code, _, err = run(capsys, ['map', 'phi-inv', '--spec', path_file])
    assert code == 2 and err.startswith('error:')


def test_map_rejects_inadmissible(tmp_path, capsys):
    bad = {'n': 4, 'weight': [2, 2, 1, 1], 'factors': [[2, 2], [2, 1]],
           'nu': [[[1, 5]], [[1, 0], [1, 0]], [[1, 0]]]}
    code, _, err = run(capsys, ['map', 'phi-inv', '--spec',
                                write(tmp_path, 'rc.json', bad)])
    assert code == 2
    assert 'not admissible' in err


def test_op_on_path(tmp_path, capsys):
    code, out, _ = run(capsys, ['op', 'e', '1', '--spec',
                                write(tmp_path, 'b.json', EXB_PATH_JSON)])
    assert code == 0
    data = json.loads(out)
    assert data['tableaux'] == [[[3]], [[1], [2]], [[1, 1, 3], [4, 5, 6]]]


def test_op_on_rc(tmp_path, capsys):
    rc = RiggedConfiguration.from_json(EXB_RC_JSON)
    code, out, _ = run(capsys, ['op', 'f', '2', '--spec',
                                write(tmp_path, 'rc.json', EXB_RC_JSON)])
    assert code == 0
    assert RiggedConfiguration.from_json(json.loads(out)) == rccrystal.f(rc, 2)


def test_op_undefined_result(tmp_path, capsys):
    element = {'n': 2, 'factors': [[1, 1]], 'tableaux': [[[1]]]}
    spec_file = write(tmp_path, 'p.json', element)
    code, out, _ = run(capsys, ['op', 'e', '1', '--spec', spec_file])
    assert code == 0
    assert json.loads(out) is None
    code, out, _ = run(capsys, ['op', 'e', '1', '--spec', spec_file,
                                '--format', 'text'])
    assert code == 0
    assert out.strip() == '(undefined)'


def test_op_bad_residue(tmp_path, capsys):
    spec_file = write(tmp_path, 'p.json', EXB_PATH_JSON)
    code, _, err = run(capsys, ['op', 'f', '0', '--spec', spec_file])
    assert code == 2 and err.startswith('error:')
    code, _, err = run(capsys, ['op', 'f', '6', '--spec', spec_file])
    assert code == 2 and err.startswith('error:')


def test_bad_input_reports(tmp_path, capsys):
    code, _, err = run(capsys, ['paths', '--spec', str(tmp_path / 'missing.json')])
    assert code == 2 and 'cannot read' in err

    garbled = tmp_path / 'garbled.json'
    garbled.write_text('not json')
    code, _, err = run(capsys, ['paths', '--spec', str(garbled)])
    assert code == 2 and 'not valid JSON' in err

    code, _, err = run(capsys, ['paths', '--spec',
                                write(tmp_path, 'a.json', {'n': 2, 'factors': []})])
    assert code == 2 and 'bad spec' in err

    bad_factor = {'n': 3, 'factors': [[4, 1]], 'weight': [2, 1, 1]}
    code, _, err = run(capsys, ['paths', '--spec',
                                write(tmp_path, 'b.json', bad_factor)])
    assert code == 2 and 'bad spec' in err

    short = {'n': 3, 'factors': [], 'weight': [0, 0]}
    code, _, err = run(capsys, ['paths', '--spec',
                                write(tmp_path, 'c.json', short)])
    assert code == 2 and 'length 3' in err

    negative = {'n': 3, 'factors': [[1, 1]], 'weight': [1, 0, -1]}
    code, _, err = run(capsys, ['rcs', '--spec',
                                write(tmp_path, 'd.json', negative)])
    assert code == 2 and 'nonnegative' in err

    vague = {'n': 3, 'factors': [], 'weight': [0, 0, 0]}
    code, _, err = run(capsys, ['map', 'phi', '--spec',
                                write(tmp_path, 'e.json', vague)])
    assert code == 2 and "'tableaux' or 'nu'" in err


def test_check_zero_count(capsys):
    code, out, _ = run(capsys, ['check', '--count', '0'])
    assert code == 0
    assert out.strip() == 'checked 0 specs: all properties hold'


def test_check_small_run_is_reproducible(capsys):
    argv = ['check', '--count', '1', '--max-n', '2', '--max-boxes', '3',
            '--seed', '11']
    code, first, _ = run(capsys, argv)
    assert code == 0
    lines = first.splitlines()
    assert lines[-1] == 'checked 9 specs: all properties hold'
    assert all(line.endswith(' ok') for line in lines[:-1])
    code, second, _ = run(capsys, argv)
    assert code == 0
    assert first == second


def test_check_wider_budget(capsys):
    code, out, _ = run(capsys, ['check', '--count', '2', '--max-n', '3',
                                '--max-boxes', '4', '--seed', '5'])
    assert code == 0
    assert out.splitlines()[-1].endswith('all properties hold')


def test_check_json_format(capsys):
    code, out, _ = run(capsys, ['check', '--count', '1', '--max-n', '2',
                                '--max-boxes', '2', '--seed', '3',
                                '--format', 'json'])
    assert code == 0
    data = json.loads(out)
    assert data['failures'] == 0
    assert all(row['status'] == 'ok' for row in data['instances'])


def test_check_budget_validation(capsys):
    code, _, err = run(capsys, ['check', '--max-n', '1'])
    assert code == 2 and err.startswith('error:')
    code, _, err = run(capsys, ['check', '--count', '-1'])
    assert code == 2 and err.startswith('error:')


def test_spec_generators():
    rng = random.Random(0)
    for _ in range(40):
        spec = random_spec(rng, 4, 6)
        assert 2 <= spec.n <= 4
        assert spec.total_boxes() <= 6
        assert all(1 <= r <= spec.n - 1 and s >= 1 for r, s in spec.factors)
    swept = sweep_specs(2, 2)
    assert swept == [CrystalSpec(2, ()), CrystalSpec(2, ((1, 1),)),
                     CrystalSpec(2, ((1, 1), (1, 1))), CrystalSpec(2, ((1, 2),))]
