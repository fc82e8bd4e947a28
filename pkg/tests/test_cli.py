import io
import json

import pytest

from commands import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, UsageError, parse_alpha, suite_list
from config import Config
from main import main
from schemas import DocumentError, PosetDocument, load_poset, parse_document

from core.poset import all_posets, complete_bipartite
from core.verification import suites as verify_suites

K22_JSON = '{"n": 4, "name": "K22", "relations": [[1,3],[1,4],[2,3],[2,4]]}'
K22_DSL = "4: 1<3 1<4 2<3 2<4"
K22_TEXT = (
    "q^3*M[4] + 2q^2*M[1,3] + M[2,2] + 2q^2*M[3,1] + "
    "2*M[1,1,2] + 4q*M[1,2,1] + 2*M[2,1,1] + 4*M[1,1,1,1]"
)


def run(argv, stdin_text: str = ""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("QSYM_MAX_N", "QSYM_TRUNC_M", "QSYM_THREADS", "QSYM_RANDOM_SEED",
                 "QSYM_RANDOM_LABELLINGS", "QSYM_RANDOM_ANTIPODE_POSETS", "LOG_DIR", "DEBUG"):
        monkeypatch.delenv(name, raising=False)


# ==================== DOCUMENTS ====================

def test_json_and_dsl_agree() -> None:
    from_json, doc = load_poset(K22_JSON)
    from_dsl, _ = load_poset(K22_DSL)
    assert from_json == from_dsl == complete_bipartite(2, 2)
    assert doc.name == "K22"


def test_documents_round_trip_over_small_classes() -> None:
    for P in all_posets(4):
        doc = PosetDocument.from_poset(P)
        assert parse_document(doc.to_json()).to_poset() == P
        assert parse_document(doc.to_dsl()).to_poset() == P


def test_relations_are_closed_on_load() -> None:
    P, _ = load_poset("3: 1<2 2<3")
    assert (1, 3) in P.less_than
    assert PosetDocument.from_poset(P).relations == [(1, 2), (2, 3)]


@pytest.mark.parametrize("text", [
    "",
    "hello",
    "3: 1-2",
    '{"n": 2, "relations": [], "colour": "red"}',
    '{"n": 2, "relations": [[1, 1]]}',
    '{"n": -1}',
])
def test_malformed_documents(text) -> None:
    with pytest.raises(DocumentError):
        parse_document(text)


def test_parse_alpha() -> None:
    assert parse_alpha("1,3") == (1, 3)
    with pytest.raises(UsageError):
        parse_alpha("1,x")
    with pytest.raises(UsageError):
        parse_alpha("0,2")
    assert suite_list("all") == suite_list(None)
    assert suite_list("oracle, faces") == ["oracle", "faces"]


# ==================== ENUMERATE / FPOLY / PPART ====================

def test_enumerate_k22_golden() -> None:
    assert run(["enumerate"], K22_JSON) == (EXIT_OK, K22_TEXT + "\n")
    assert run(["enumerate"], K22_DSL) == (EXIT_OK, K22_TEXT + "\n")


def test_enumerate_from_file(tmp_path) -> None:
    path = tmp_path / "k22.json"
    path.write_text(K22_JSON, encoding="utf-8")
    assert run(["enumerate", "--input", str(path)]) == (EXIT_OK, K22_TEXT + "\n")


def test_enumerate_single_coefficient() -> None:
    assert run(["enumerate", "--alpha", "1,3"], K22_JSON) == (EXIT_OK, "2q^2\n")
    code, out = run(["enumerate", "--alpha", "1,3", "--format", "json"], K22_JSON)
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 4, "alpha": [1, 3], "coefficients": [0, 0, 2]}


def test_enumerate_bases_and_q0() -> None:
    assert run(["enumerate", "--basis", "L"], "2: 1<2") == (EXIT_OK, "q*L[2] + (1 - q)*L[1,1]\n")
    assert run(["enumerate", "--q0"], "2: 1<2") == (EXIT_OK, "M[1,1]\n")
    assert run(["enumerate", "--q0"], "2:") == (EXIT_OK, "M[2] + 2*M[1,1]\n")


def test_enumerate_json() -> None:
    code, out = run(["enumerate", "--format", "json"], "2: 1<2")
    assert code == EXIT_OK
    assert json.loads(out) == {
        "n": 2,
        "q0": False,
        "basis": "M",
        "terms": [
            {"composition": [2], "coefficients": [0, 1]},
            {"composition": [1, 1], "coefficients": [1]},
        ],
    }


def test_enumerate_truncated() -> None:
    assert run(["enumerate", "--m", "2"], "2: 1<2") == (EXIT_OK, "q*x1^2 + x1*x2 + q*x2^2\n")


def test_fpoly() -> None:
    assert run(["fpoly"], K22_JSON) == (EXIT_OK, "1 + 4q + 4q^2 + q^3\n")
    assert run(["fpoly"], "5: 1<5 2<5 3<5 4<5") == (EXIT_OK, "1 + 4q + 6q^2 + 4q^3 + q^4\n")
    assert run(["fpoly"], "1:") == (EXIT_OK, "1\n")
    code, out = run(["fpoly", "--format", "json"], K22_JSON)
    assert json.loads(out) == {"n": 4, "coefficients": [1, 4, 4, 1]}


def test_ppart() -> None:
    assert run(["ppart", "--m", "2"], "2: 1<2") == (EXIT_OK, "x1^2 + x1*x2 + x2^2\n")
    assert run(["ppart", "--m", "2"], "2: 2<1") == (EXIT_OK, "x1*x2\n")
    assert run(["ppart", "--extensions"], "2: 1<2") == (EXIT_OK, "M[2] + M[1,1]\n")
    assert run(["ppart", "--extensions", "--basis", "L"], "2:") == (EXIT_OK, "L[2] + L[1,1]\n")


def test_antipode_check() -> None:
    code, out = run(["antipode-check"], "2: 1<2")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "S(F_q)    = (1 - q)*M[2] + M[1,1]",
        "flag sum  = (1 - q)*M[2] + M[1,1]",
        "antipode identity: holds",
    ]
    code, out = run(["antipode-check", "--format", "json"], K22_JSON)
    assert code == EXIT_OK
    assert json.loads(out)["holds"] is True


# ==================== INPUT ERRORS ====================

@pytest.mark.parametrize("argv,stdin_text", [
    (["enumerate"], "3: 1<2 2<3 3<1"),
    (["enumerate"], "2: 1<3"),
    (["enumerate"], "not a poset"),
    (["enumerate", "--alpha", "1,2"], K22_JSON),
    (["enumerate", "--alpha", "a"], K22_JSON),
    (["enumerate", "--input", "/nonexistent/poset.json"], ""),
    (["frobnicate"], ""),
    (["enumerate", "--format", "xml"], K22_JSON),
    (["enumerate", "--alpha", "1,3", "--basis", "L"], K22_JSON),
    (["enumerate", "--alpha", "1,3", "--m", "2"], K22_JSON),
    (["enumerate", "--alpha", "1,3", "--q0"], K22_JSON),
    (["enumerate", "--m", "2", "--basis", "M"], K22_JSON),
    (["survey", "--max-n", "0"], ""),
])
def test_input_errors_exit_two(argv, stdin_text) -> None:
    code, out = run(argv, stdin_text)
    assert code == EXIT_USAGE
    assert out == ""


def test_undecodable_input_exits_two(tmp_path) -> None:
    path = tmp_path / "poset.json"
    path.write_bytes(b'{"n": 2, "name": "\xff\xfe", "relations": [[1,2]]}')
    assert run(["enumerate", "--input", str(path)]) == (EXIT_USAGE, "")

    out = io.StringIO()
    stdin = io.TextIOWrapper(io.BytesIO(b"2: 1<2 \xff"), encoding="utf-8")
    assert main(["fpoly"], stdin=stdin, stdout=out) == EXIT_USAGE
    assert out.getvalue() == ""


# ==================== VERIFY / SURVEY ====================

def test_verify_selected_suites() -> None:
    code, out = run(["verify", "--max-n", "3", "--trunc-m", "2", "--suite", "oracle,faces"])
    assert code == EXIT_OK
    assert out.splitlines() == [
        "oracle: 1+2+5 posets, all pass",
        "faces: 1+2+5 posets, all pass",
    ]


def test_verify_json_is_thread_independent() -> None:
    argv = ["verify", "--max-n", "3", "--trunc-m", "2", "--suite", "opposite,euler", "--json"]
    single = run(argv + ["--threads", "1"])
    pooled = run(argv + ["--threads", "3"])
    assert single == pooled
    assert json.loads(single[1])["all_pass"] is True


def test_verify_gates() -> None:
    assert run(["verify", "--max-n", "6"])[0] == EXIT_USAGE
    assert run(["verify", "--max-n", "2", "--suite", "nope"])[0] == EXIT_USAGE
    assert run(["verify", "--max-n", "0"])[0] == EXIT_USAGE


def test_verify_failure_prints_counterexample_documents(monkeypatch) -> None:
    monkeypatch.setattr(verify_suites, "euler_flag_identity", lambda P: P.n != 2)
    expected = set(all_posets(2))

    code, out = run(["verify", "--max-n", "2", "--suite", "euler"])
    assert code == EXIT_FAILURE
    lines = out.splitlines()
    assert lines[0] == "euler: 1+2 posets, 2 failed"
    prefix = "counterexample (euler): "
    assert all(line.startswith(prefix) for line in lines[1:])
    assert {parse_document(line[len(prefix):]).to_poset() for line in lines[1:]} == expected

    code, out = run(["verify", "--max-n", "2", "--suite", "euler", "--json"])
    assert code == EXIT_FAILURE
    data = json.loads(out)
    assert data["all_pass"] is False
    failures = data["suites"][0]["failures"]
    assert {PosetDocument.model_validate(doc).to_poset() for doc in failures} == expected


def test_survey_and_search() -> None:
    assert run(["survey", "--max-n", "3"]) == (
        EXIT_OK,
        "n=1: 1 classes, 0 collisions\nn=2: 2 classes, 0 collisions\nn=3: 5 classes, 0 collisions\n",
    )
    assert run(["search-collision", "--n", "4"]) == (EXIT_OK, "n=4: no pair found\n")
    assert run(["survey", "--max-n", "6"])[0] == EXIT_USAGE
    assert run(["survey", "--max-n", "7", "--long"])[0] == EXIT_USAGE
    assert run(["search-collision", "--n", "7"])[0] == EXIT_USAGE
    assert run(["search-collision", "--n", "8", "--long"])[0] == EXIT_USAGE


# ==================== CONFIG ====================

def test_config_defaults() -> None:
    config = Config()
    assert (config.QSYM_MAX_N, config.QSYM_TRUNC_M, config.QSYM_THREADS) == (5, 4, 1)
    assert config.LOG_DIR == ""


def test_config_reads_environment(monkeypatch) -> None:
    monkeypatch.setenv("QSYM_MAX_N", "3")
    monkeypatch.setenv("QSYM_THREADS", "2")
    config = Config()
    assert config.QSYM_MAX_N == 3
    assert config.QSYM_THREADS == 2


@pytest.mark.parametrize("name,value", [
    ("QSYM_MAX_N", "9"),
    ("QSYM_TRUNC_M", "0"),
    ("QSYM_THREADS", "0"),
    ("QSYM_RANDOM_LABELLINGS", "-1"),
    ("QSYM_MAX_N", "five"),
])
def test_bad_config_exits_two(monkeypatch, name, value) -> None:
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        Config()
    assert run(["fpoly"], "1:")[0] == EXIT_USAGE


def test_verify_defaults_come_from_config(monkeypatch) -> None:
    monkeypatch.setenv("QSYM_MAX_N", "2")
    monkeypatch.setenv("QSYM_TRUNC_M", "2")
    code, out = run(["verify", "--suite", "oracle"])
    assert (code, out) == (EXIT_OK, "oracle: 1+2 posets, all pass\n")


def test_log_dir_receives_jsonl(monkeypatch, tmp_path) -> None:
    monkeypatch.setenv("LOG_DIR", str(tmp_path))
    assert run(["fpoly"], "2: 1<2") == (EXIT_OK, "1 + q\n")
    files = list(tmp_path.glob("*.jsonl"))
    assert len(files) == 1
    categories = [json.loads(line)["category"] for line in files[0].read_text(encoding="utf-8").splitlines()]
    assert "ENUMERATE" in categories
