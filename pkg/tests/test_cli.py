import json
from fractions import Fraction

import pytest

from tangentpsc.cli import main
from tangentpsc.commands import EXIT_INVALID_METRIC, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE
from tangentpsc.utils.file_reading import DEFAULT_CONFIG_PATH


def run(tmp_path, *argv):
    output = tmp_path / 'out' / 'document.json'
    code = main([*argv, '--output_path', str(output)])
    text = output.read_text() if output.exists() else None
    return code, text


def test_displays(tmp_path):
    code, text = run(tmp_path, 'displays')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['consistent']
    assert [d['name'] for d in document['displays'] if not d['matches']] == ['2tMN']


def test_certify_paper_metric(tmp_path):
    code, text = run(tmp_path, 'certify', '--metric', 'paper', '--level', '1')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['verdict'] == 'uniformly-positive'
    assert document['reverified']
    assert 0 < Fraction(document['c1_lo']) <= Fraction(document['c1_hi'])
    assert document['c1_approx'] == pytest.approx(0.1956, abs=1e-3)
    assert document['evidence']['value_at_zero'] == '19998'
    assert document['level_check']['holds']
    assert document['level_check']['value_at_start'] == '4999/5000'


def test_certify_sasaki_is_negative(tmp_path):
    code, text = run(tmp_path, 'certify', '--metric', 'sasaki')
    assert code == EXIT_NEGATIVE
    document = json.loads(text)
    assert document['verdict'] == 'not-positive'
    assert document['witness_t'] == '0'
    assert document['witness_value'] == '-2'


def test_certify_from_config_file(tmp_path):
    code, text = run(tmp_path, 'certify', '--config_path', str(DEFAULT_CONFIG_PATH.parent / 'config_paper.yml'))
    assert code == EXIT_OK
    assert json.loads(text)['level_check']['level'] == '1'


def test_invalid_metric_document(tmp_path):
    code, text = run(tmp_path, 'certify', '--a', '1', '--b=-1')
    assert code == EXIT_INVALID_METRIC
    document = json.loads(text)
    assert not document['valid']
    assert document['failed'] == 'alpha'
    assert document['witness_t'] == '1'


@pytest.mark.parametrize("argv", [
    ['certify', '--metric', 'riemann'],
    ['profile', '--a', '1 +', '--b', '1'],
    ['profile', '--a', '1/100'],
    ['curvature'],
    ['search', '--a', 'alpha', '--b', '1', '--grid', 'alpha=1:0:1'],
    ['oracle', '--metric', 'paper', '--step', '0.4'],
])
def test_usage_errors(tmp_path, argv):
    code, _ = run(tmp_path, *argv)
    assert code == EXIT_USAGE


def test_profile_json(tmp_path, paper_quintic):
    code, text = run(tmp_path, 'profile', '--metric', 'paper')
    assert code == EXIT_OK
    document = json.loads(text)
    assert [Fraction(c) for c in document['numerator']] == list(paper_quintic.coeffs)
    assert [Fraction(c) for c in document['denominator']] == [Fraction(1, 10 ** 4), Fraction(1, 25),
                                                              Fraction(101, 25), 8, 4]
    assert document['value_at_zero'] == '19998'
    assert document['growth']['numerator_dominates']
    _, again = run(tmp_path, 'profile', '--metric', 'paper')
    assert again == text


def test_profile_csv_on_stdout(capsys):
    code = main(['profile', '--metric', 'paper', '--format', 'csv', '--samples', '0:2:1'])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 't,Sc'
    rows = [tuple(float(v) for v in line.split(',')) for line in lines[1:]]
    assert [t for t, _ in rows] == [0.0, 1.0, 2.0]
    assert rows[0][1] == 19998.0
    assert rows[1][1] == pytest.approx(5.517597 / 16.0801, rel=1e-9)
    assert rows[2][1] == pytest.approx(289.825794 / 144.2401, rel=1e-9)


def test_dominate(tmp_path):
    code, text = run(tmp_path, 'dominate', '--lhs', 'paper', '--lhs_scale', '100', '--rhs', 'cheeger-gromoll')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['holds']
    # already scaled by 100, so no further factor is needed
    assert Fraction(document['minimal_scale']['lower']) <= 1 <= Fraction(document['minimal_scale']['upper'])

    code, text = run(tmp_path, 'dominate', '--lhs', 'paper', '--lhs_scale', '1', '--rhs', 'cheeger-gromoll')
    assert code == EXIT_NEGATIVE
    document = json.loads(text)
    assert document['failed_component'] == 'perp'
    assert document['witness_t'] == '0'
    assert Fraction(document['minimal_scale']['lower']) <= 100 <= Fraction(document['minimal_scale']['upper'])


def test_dominate_takes_metric_and_scale_flags(tmp_path):
    code, text = run(tmp_path, 'dominate', '--metric', 'sasaki', '--scale', '100')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['lhs']['name'] == 'sasaki'
    assert document['lhs']['scale'] == '100'
    assert document['rhs']['name'] == 'cheeger-gromoll'
    assert document['holds']

    # the specific flags win
    code, text = run(tmp_path, 'dominate', '--metric', 'sasaki', '--lhs', 'paper', '--scale', '100',
                     '--lhs_scale', '1')
    assert code == EXIT_NEGATIVE
    assert json.loads(text)['lhs']['name'] == 'paper'


def test_search(tmp_path):
    code, text = run(tmp_path, 'search', '--a', 'alpha', '--b', 'beta*(1 + t)', '--grid', 'alpha=1/100',
                     '--grid', 'beta=0:1:1', '--num_workers', '2')
    assert code == EXIT_OK
    document = json.loads(text)
    assert [entry['bindings'] for entry in document['ranked']] == [{'alpha': '1/100', 'beta': '1'}]
    assert [entry['bindings'] for entry in document['non_positive']] == [{'alpha': '1/100', 'beta': '0'}]


def test_oracle_flat_sasaki(tmp_path):
    code, text = run(tmp_path, 'oracle', '--metric', 'sasaki', '--C', '0', '--sample_count', '3',
                     '--num_workers', '1')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['pass']
    assert len(document['samples']) == 3
    assert document['seed'] == 42
