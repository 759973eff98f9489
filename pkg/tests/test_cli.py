import json

import pytest

from kroncalc.cli import main


@pytest.fixture()
def run(tmp_path, capsys):
    def _run(*argv):
        code = main(["--cache-dir", str(tmp_path / "cache"), *argv])
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {
            k: _strip_timing(v)
            for k, v in obj.items()
            if k not in ("timing", "seconds")
        }
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


class TestG:
    def test_known_values(self, run):
        for lam, mu, nu, want in [
            ("2,2", "2,2", "2,2", "1"),
            ("1,1", "1,1", "1,1", "0"),
            ("8,2^5", "8,2^5", "6^3", "8"),
        ]:
            code, out, _ = run("--format", "json", "g", lam, mu, nu)
            assert code == 0
            assert json.loads(out)["result"] == want

    def test_parse_error_exit_2(self, run):
        code, _, err = run("g", "nope", "1", "1")
        assert code == 2
        assert "error" in err

    def test_size_mismatch_exit_2(self, run):
        code, _, err = run("g", "2,1", "2,2", "2,2")
        assert code == 2


class TestRkron:
    def test_prop24_zero(self, run):
        code, out, _ = run("--format", "json", "rkron", "1^5", "1^5", "3,3")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"] == "0"

    def test_bdo_method_twelve(self, run):
        code, out, _ = run(
            "--format", "json", "rkron", "2^5", "2^5", "6,6", "--method", "bdo"
        )
        doc = json.loads(out)
        assert doc["result"] == "12"
        assert doc["method"] == "bdo"

    def test_methods_agree(self, run):
        for al, be, ga in [("2,1", "1,1", "2"), ("3", "1,1,1", "2,2")]:
            _, out1, _ = run("--format", "json", "rkron", al, be, ga, "--method", "stable")
            _, out2, _ = run("--format", "json", "rkron", al, be, ga, "--method", "bdo")
            assert json.loads(out1)["result"] == json.loads(out2)["result"]

    def test_empty_partition_spelling(self, run):
        code, out, _ = run("--format", "json", "rkron", "-", "-", "-")
        assert code == 0
        assert json.loads(out)["result"] == "1"


class TestLRCommand:
    def test_identity_case(self, run):
        code, out, _ = run("--format", "json", "lr", "2,1", "2,1", "-")
        assert json.loads(out)["result"] == "1"

    def test_derived_case(self, run):
        code, out, _ = run("--format", "json", "lr", "2,1", "1", "1,1")
        assert json.loads(out)["result"] == "1"

    def test_size_mismatch(self, run):
        code, _, _ = run("lr", "3,1", "1", "1")
        assert code == 2


class TestVerify:
    def test_prop24_passes(self, run):
        code, out, _ = run("--format", "json", "verify", "prop24")
        assert code == 0
        doc = json.loads(out)
        assert doc["report"]["status"] == "pass"

    def test_thm12_k3(self, run):
        code, out, _ = run("--format", "json", "verify", "thm12", "--k", "3")
        assert code == 0

    def test_family(self, run):
        code, out, _ = run("--format", "json", "verify", "family", "--gamma", "3,3")
        assert code == 0

    def test_custom_failure_exit_1(self, run):
        code, _, _ = run(
            "verify", "custom", "--alpha", "1", "--beta", "1", "--gamma", "1", "--N", "2"
        )
        assert code == 1

    def test_custom_not_desk_feasible_exit_3(self, run):
        code, _, _ = run(
            "--budget", "10",
            "verify", "custom", "--alpha", "1^5", "--beta", "1^5", "--gamma", "3,3",
            "--N", "2",
        )
        assert code == 3

    def test_missing_gamma_exit_2(self, run):
        code, _, _ = run("verify", "family")
        assert code == 2

    def test_family_guard_reported_as_fail(self, run):
        code, out, _ = run("--format", "json", "verify", "family", "--gamma", "3,1")
        assert code == 1
        assert json.loads(out)["report"]["status"] == "fail"


class TestScanMax:
    def test_n1(self, run):
        code, out, _ = run("--format", "json", "--jobs", "1", "scan-max", "--n", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"] == "1"
        assert doc["table"]["max_kronecker_at_n"] == "1"
        assert doc["table"]["respects_upper_bound"] == "True"

    def test_budget_exit_3(self, run):
        code, _, err = run("--budget", "6", "scan-max", "--n", "3")
        assert code == 3


class TestIdentity:
    def test_bdo_small(self, run):
        code, out, _ = run("--format", "json", "identity", "bdo", "--total", "6")
        assert code == 0
        assert int(json.loads(out)["checked"]) > 0

    def test_bor_small(self, run):
        code, out, _ = run("--format", "json", "identity", "bor", "--n", "3")
        assert code == 0
        assert json.loads(out)["validated_sign"] == "-1"

    def test_bor_vacuous(self, run):
        code, out, _ = run("--format", "json", "identity", "bor", "--n", "0")
        assert code == 0


class TestOutputFormats:
    def test_json_deterministic_modulo_timing(self, run):
        _, out1, _ = run("--format", "json", "g", "2,2", "2,2", "2,2")
        _, out2, _ = run("--format", "json", "g", "2,2", "2,2", "2,2")
        assert _strip_timing(json.loads(out1)) == _strip_timing(json.loads(out2))

    def test_json_integers_are_decimal_strings(self, run):
        _, out, _ = run("--format", "json", "g", "8,2^5", "8,2^5", "6^3")
        doc = json.loads(out)
        assert doc["result"] == "8"
        assert isinstance(doc["result"], str)

    def test_csv_matches_json_numeric_content(self, run):
        _, js, _ = run("--format", "json", "rkron", "2^5", "2^5", "6,6")
        _, cs, _ = run("--format", "csv", "rkron", "2^5", "2^5", "6,6")
        doc = json.loads(js)
        rows = dict(line.split(",", 1) for line in cs.splitlines())
        assert rows["result"] == doc["result"]
        assert rows["method"] == doc["method"]
        assert rows["inputs.alpha"] == doc["inputs"]["alpha"]

    def test_plain_format_readable(self, run):
        _, out, _ = run("g", "2,2", "2,2", "2,2")
        assert "result: 1" in out


class TestCacheDir:
    def test_cache_file_created_and_reused(self, tmp_path, capsys):
        cache_dir = tmp_path / "cc"
        assert main(["--cache-dir", str(cache_dir), "g", "2,2", "2,2", "2,2"]) == 0
        capsys.readouterr()
        cache_file = cache_dir / "characters.cache"
        assert cache_file.exists()
        first = cache_file.read_bytes()
        assert main(["--cache-dir", str(cache_dir), "g", "2,2", "2,2", "2,2"]) == 0
        capsys.readouterr()
        assert cache_file.read_bytes() == first
