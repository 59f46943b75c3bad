import json
import subprocess
import sys

import pytest

from planarcube.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, capsys):
    def gen(family, *params):
        path = tmp_path / f"{family}-{'-'.join(map(str, params))}.txt"
        assert main(["generate", family, *map(str, params), "-o", str(path)]) == 0
        capsys.readouterr()
        return str(path)

    return gen


class TestExitCodes:
    def test_recognize(self, capsys, files):
        code, out, _ = run(capsys, "recognize", files("hypercube", 3))
        assert code == 0 and "dimension 3" in out
        code, out, _ = run(capsys, "recognize", files("complete-bipartite", 2, 3))
        assert code == 1 and "ThetaNotTransitive" in out

    def test_planarity(self, capsys, files):
        assert run(capsys, "planarity", files("gear", 3))[0] == 0
        code, out, _ = run(capsys, "planarity", files("complete-bipartite", 3, 3))
        assert code == 1 and "K33" in out

    def test_theta(self, capsys, files):
        code, out, _ = run(capsys, "theta", files("even-cycle", 6))
        assert code == 0 and out.startswith("3 ")

    def test_usage(self, capsys, tmp_path):
        assert run(capsys, "recognize", str(tmp_path / "missing"))[0] == 2
        assert run(capsys)[0] == 2
        assert run(capsys, "generate", "nope", "3")[0] == 2
        assert run(capsys, "generate", "grid", "3")[0] == 2
        bad = tmp_path / "bad.txt"
        bad.write_text("a b c\n")
        code, _, err = run(capsys, "planarity", str(bad))
        assert code == 2 and err.startswith("error:")

    def test_contract_and_expand(self, capsys, files, tmp_path):
        q3 = files("hypercube", 3)
        code, out, _ = run(capsys, "contract", q3, "0")
        assert code == 0 and len(out.strip().splitlines()) == 1 + 4
        c4 = files("even-cycle", 4)
        code, out, _ = run(capsys, "expand", c4, "--g1", "0,1,2,3", "--g2", "0,1,2,3")
        assert code == 0 and len(out.strip().splitlines()) == 1 + 12
        assert run(capsys, "expand", c4, "--g1", "0", "--g2", "2")[0] == 1
        assert run(capsys, "expand", c4, "--g1", "0,x", "--g2", "2")[0] == 2
        assert run(capsys, "contract", files("complete-bipartite", 2, 3), "0")[0] == 1

    def test_check_obstruction(self, capsys, files):
        assert run(capsys, "check-obstruction", files("gear-obstruction", 3))[0] == 0
        assert run(capsys, "check-obstruction", files("hypercube", 5))[0] == 1
        assert run(capsys, "check-obstruction", files("complete-bipartite", 2, 3))[0] == 1


class TestCertificates:
    def test_certify_replay_verify(self, capsys, files, tmp_path):
        cert = str(tmp_path / "q3.json")
        code, out, _ = run(capsys, "certify", files("hypercube", 3), "-o", cert)
        assert code == 0 and "3 non-crossing" in out
        code, out, _ = run(capsys, "replay", cert)
        assert code == 0 and "8 vertices, 12 edges" in out
        assert run(capsys, "verify", cert) == (0, "decomposition certificate verifies\n", "")

    def test_tampered(self, capsys, files, tmp_path):
        cert = tmp_path / "q3.json"
        run(capsys, "certify", files("hypercube", 3), "-o", str(cert))
        obj = json.loads(cert.read_text())
        step = next(s for s in obj["steps"] if len(s["order2"]) >= 3)
        step["order2"] = step["order2"][::-1]
        cert.write_text(json.dumps(obj))
        code, out, _ = run(capsys, "replay", str(cert))
        assert code == 1 and "InvalidStep" in out
        assert run(capsys, "verify", str(cert))[0] == 1

    def test_refutations_written(self, capsys, files, tmp_path):
        for family, params, kind in (("gear-obstruction", (3,), "kuratowski"), ("complete-bipartite", (2, 3), "pc-refutation")):
            out_path = tmp_path / f"{family}.json"
            assert run(capsys, "certify", files(family, *params), "-o", str(out_path))[0] == 1
            assert json.loads(out_path.read_text())["kind"] == kind
            assert run(capsys, "verify", str(out_path)) == (0, f"{kind} certificate verifies\n", "")
            assert run(capsys, "replay", str(out_path))[0] == 2

    def test_find_flaw(self, capsys, tmp_path):
        out_path = tmp_path / "flaw.json"
        code, out, _ = run(capsys, "find-flaw", "-o", str(out_path))
        assert code == 0 and "K33" in out
        assert run(capsys, "verify", str(out_path))[0] == 0
        assert run(capsys, "find-flaw", "--max-candidates", "0")[0] == 1

    def test_garbage_certificate(self, capsys, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{}")
        assert run(capsys, "verify", str(p))[0] == 2


def test_export_dot(capsys, files):
    code, out, _ = run(capsys, "export-dot", files("even-cycle", 4), "--embedding")
    assert code == 0 and out.startswith('graph "even-cycle-4" {') and "rotation=" in out
    assert run(capsys, "export-dot", files("complete", 5), "--embedding")[0] == 1
    assert run(capsys, "export-dot", files("complete", 5))[0] == 0


def _module(*argv, stdin=None):
    return subprocess.run([sys.executable, "-m", "planarcube", *argv], input=stdin,
                          capture_output=True, text=True, timeout=120)


def test_pipeline_is_deterministic():
    runs = []
    for _ in range(2):
        g = _module("generate", "random-planar-pc", "6", "11")
        assert g.returncode == 0
        c = _module("certify", "-", "-o", "-", stdin=g.stdout)
        assert c.returncode == 0
        runs.append(c.stdout)
    assert runs[0] == runs[1]


def test_module_usage_exit():
    r = _module("bogus")
    assert r.returncode == 2 and "usage" in r.stderr
