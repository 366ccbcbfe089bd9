# tests/test_cli.py
import pytest

from diagram_engine.cli import main
from diagram_engine.core.storage import parse_matrix, parse_vector
from diagram_engine.core.utils import permutation_sign


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_partition(capsys):
    """Test the (1,1) partition listing"""
    code, out, _ = run(capsys, "enumerate", "--family", "partition", "--k", "1", "--l", "1")
    assert code == 0
    assert out.splitlines() == ["P[1->1]: {1,2}", "P[1->1]: {1}/{2}", "count=2"]


@pytest.mark.parametrize(
    "argv,count",
    [
        (["--family", "brauer", "--k", "2", "--l", "2"], 3),
        (["--family", "bg", "--k", "2", "--l", "2", "--n", "2"], 6),
        (["--family", "bounded", "--k", "2", "--l", "2", "--n", "2"], 8),
    ],
)
def test_enumerate_families(capsys, argv, count):
    """Test family listings end with the count"""
    code, out, _ = run(capsys, "enumerate", *argv)
    lines = out.splitlines()
    assert code == 0
    assert lines[-1] == f"count={count}"
    assert len(lines) == count + 1


def test_enumerate_count_only(capsys):
    """Test --count-only prints the closed form"""
    code, out, _ = run(capsys, "enumerate", "--family", "partition", "--k", "4", "--l", "4", "--count-only")
    assert code == 0
    assert out == "count=4140\n"


def test_enumerate_bg_without_n(capsys):
    """Test a missing --n for bg is an invalid flag"""
    code, out, err = run(capsys, "enumerate", "--family", "bg", "--k", "2", "--l", "2")
    assert code == 2
    assert out == ""
    assert "requires --n" in err


def test_unknown_flag(capsys):
    """Test argparse errors map to exit 2"""
    code, _, _ = run(capsys, "enumerate", "--family", "partition", "--k", "1")
    assert code == 2


def test_matrix_theta_identity(capsys):
    """Test theta of the identity at n=4"""
    code, out, _ = run(capsys, "matrix", "--functor", "theta", "--n", "4", "P[1->1]: {1,2}")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# functor=theta n=4 k=1 l=1 rows=4 cols=4"
    assert lines[1:] == ["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"]


def test_matrix_theta_all_ones_sparse(capsys):
    """Test the sparse layout re-parses"""
    code, out, _ = run(capsys, "matrix", "--n", "4", "--format", "sparse", "P[1->1]: {1}/{2}")
    assert code == 0
    assert parse_matrix(out, "sparse").entries.sum() == 16


def test_matrix_x_sp_odd_n(capsys):
    """Test the symplectic functor at odd n exits 4"""
    code, out, err = run(capsys, "matrix", "--functor", "x_sp", "--n", "3", "P[1->1]: {1,2}")
    assert code == 4
    assert out == ""
    assert "symplectic dimension must be even" in err


def test_matrix_parse_error(capsys):
    """Test a malformed diagram exits 3 with the position"""
    code, _, err = run(capsys, "matrix", "--n", "2", "P[1->1]: {1,2")
    assert code == 3
    assert "position 13" in err


def test_matrix_psi_classifies_general_diagram(capsys):
    """Test psi reads a general diagram with n singletons as (l+k)\\n"""
    code, out, _ = run(capsys, "matrix", "--functor", "psi", "--n", "2", "P[2->2]: {1,2}/{3}/{4}")
    assert code == 0
    assert out.splitlines()[1] == "0 1 -1 0"


def test_matrix_kind_mismatch(capsys):
    """Test phi on a general diagram exits 4"""
    code, _, _ = run(capsys, "matrix", "--functor", "phi", "--n", "2", "P[1->1]: {1}/{2}")
    assert code == 4


def test_matrix_cap(capsys):
    """Test the dense cap exits 6"""
    code, _, _ = run(capsys, "matrix", "--n", "4", "--dense-cap", "10", "P[1->1]: {1,2}")
    assert code == 6


def test_compose_and_tensor(capsys):
    """Test compose and tensor print diagram sums"""
    code, out, _ = run(capsys, "compose", "--n", "3", "--context", "brauer", "P[2->0]: {1,2}", "P[0->2]: {1,2}")
    assert code == 0
    assert out.strip() == "3 * P[0->0]:"
    code, out, _ = run(capsys, "tensor", "--n", "3", "P[0->2]: {1,2}", "P[1->1]: {1,2}")
    assert out.strip() == "1 * P[1->3]: {1,2}/{3,4}"


def test_compose_bg_context_retags(capsys):
    """Test general diagrams with n singletons are read as (l+k)\\n in the BG context"""
    code, out, _ = run(capsys, "compose", "--n", "2", "--context", "bg", "P[2->0]: {1}/{2}", "P[0->2]: {1}/{2}")
    assert code == 0
    assert out.strip() == "2 * P[0->0]:"


def write_vector(tmp_path, text):
    path = tmp_path / "v.txt"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_apply_cap_trace(capsys, tmp_path):
    """Test the cap on (1,0,0,1) gives 2 on both paths"""
    vector = write_vector(tmp_path, "# n=2 order=2 mode=exact\n1\n0\n0\n1\n")
    for path in ("--fast", "--dense"):
        code, out, _ = run(capsys, "apply", "--vector", vector, path, "P[2->0]: {1,2}")
        assert code == 0
        assert out == "# n=2 order=0 mode=exact\n2\n"


def test_apply_identity_echo(capsys, tmp_path):
    """Test the identity echoes the input vector"""
    text = "# n=3 order=1 mode=exact\n1/2\n-1\n4\n"
    code, out, _ = run(capsys, "apply", "--vector", write_vector(tmp_path, text), "P[1->1]: {1,2}")
    assert code == 0
    assert parse_vector(out) == parse_vector(text)


def test_apply_verify(capsys, tmp_path):
    """Test --verify prints an exact zero deviation"""
    values = "\n".join(f"{i}/{i % 4 + 1}" for i in range(27))
    vector = write_vector(tmp_path, f"# n=3 order=3 mode=exact\n{values}\n")
    code, out, _ = run(capsys, "apply", "--vector", vector, "--verify", "P[3->2]: {1,3}/{2,4,5}")
    assert code == 0
    assert out == "deviation=0\n"


def test_apply_length_mismatch(capsys, tmp_path):
    """Test a vector of the wrong order exits 5"""
    vector = write_vector(tmp_path, "# n=2 order=1 mode=exact\n1\n0\n")
    code, _, _ = run(capsys, "apply", "--vector", vector, "P[2->0]: {1,2}")
    assert code == 5


def test_bench_csv(capsys):
    """Test bench writes CSV with the documented columns"""
    code, out, _ = run(capsys, "bench", "--case", "1,1,2", "--trials", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "shape,n,dense_ms,fast_ms,speedup,max_dev"
    assert lines[1].startswith('"(1,1)",2,')


def test_check_equivariance_sym(capsys):
    """Test the equivariance suite at S_3 reports exact zero"""
    code, out, _ = run(capsys, "check", "--suite", "equivariance", "--group", "sym", "--n", "3")
    assert code == 0
    assert len(out.splitlines()) == 1
    assert out.startswith("suite=equivariance:sym:n=3 status=pass")
    assert "max_residual=0" in out


def test_check_failure_exits_1(capsys, mocker):
    """Test a broken rule-1 sign makes check exit 1 with a counterexample"""
    mocker.patch(
        "diagram_engine.services.algebra._uncrossing_sign",
        side_effect=lambda keys: -permutation_sign(keys),
    )
    code, out, _ = run(capsys, "check", "--suite", "functoriality", "--context", "bg", "--n", "2")
    assert code == 1
    assert "status=fail" in out
    assert "counterexample: d2=P[" in out
