import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = os.environ["HODGEHYPER_CLI"]
DATA = os.environ["HODGEHYPER_DATA"]


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def data(name):
    return os.path.join(DATA, name)


def betti_json(*args):
    code, out, err = run("betti", "--output", "json", *args)
    assert code == 0, err
    return {d["n"]: (d["betti_embedded"], d["betti_complex"]) for d in json.loads(out)["degrees"]}


class Betti(unittest.TestCase):
    def test_three_vertices_under_triangle(self):
        self.assertEqual(betti_json("--input", data("fig2_h0.hg")), {0: (3, 1), 1: (0, 0), 2: (0, 0)})

    def test_evaluation_weight_on_h2(self):
        got = betti_json("--input", data("fig2_h2.hg"), "--weight", data("fig2_evaluation.json"), "--degrees", "0")
        self.assertEqual(got, {0: (1, 1)})

    def test_fig1_degree_one(self):
        self.assertEqual(betti_json("--input", data("fig1.hg"), "--degrees", "1"), {1: (1, 2)})

    def test_triple_agreement_reported(self):
        code, out, _ = run("betti", "--input", data("fig1.hg"), "--degrees", "1", "--output", "json")
        self.assertEqual(code, 0)
        cert = json.loads(out)["degrees"][0]["triple_agreement"]
        self.assertEqual(cert, {"ker_inf": 1, "ker_sup": 1, "quotient": 1})

    def test_degree_selectors(self):
        self.assertEqual(set(betti_json("--input", data("skeleton4.hg"), "--degrees", "1-3")), {1, 2, 3})
        self.assertEqual(set(betti_json("--input", data("skeleton4.hg"), "--degrees", "0,2")), {0, 2})

    def test_backends_agree(self):
        for name in ["fig1.hg", "skeleton3.hg", "fig2_h1.hg", "hollow_triangle.hg"]:
            code, out, err = run("betti", "--input", data(name), "--backend", "both", "--output", "json")
            self.assertEqual(code, 0, err)
            self.assertEqual(json.loads(out)["backend_mismatches"], [])

    def test_csv_header(self):
        code, out, _ = run("betti", "--input", data("edge.hg"), "--output", "csv")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "n,betti_embedded,betti_complex,dim_common,dim_ker_s,dim_coker_s")


class Hodge(unittest.TestCase):
    def test_fig1_s_star(self):
        code, out, _ = run("hodge", "--input", data("fig1.hg"), "--degrees", "1", "--output", "json")
        self.assertEqual(code, 0)
        rec = json.loads(out)["degrees"][0]
        self.assertEqual((rec["dim_common"], rec["dim_ker_s_star"], rec["dim_coker_s_star"]), (1, 0, 1))
        self.assertEqual(sum(rec["summand_dims_ambient"]), 18)

    def test_harmonic_bases(self):
        code, out, _ = run("hodge", "--input", data("hollow_triangle.hg"), "--degrees", "1", "--harmonic",
                           "--output", "json")
        self.assertEqual(code, 0)
        hb = json.loads(out)["degrees"][0]["harmonic_bases"]
        self.assertEqual(len(hb["ambient"]), 1)
        self.assertEqual(sorted(hb["ambient"][0]), ["v0 v1", "v0 v2", "v1 v2"])

    def test_failed_identity_exits_one(self):
        with tempfile.NamedTemporaryFile("w", suffix=".hg", delete=False) as f:
            f.write("a\na b\n")
        try:
            code, out, _ = run("hodge", "--input", f.name, "--degrees", "0")
            self.assertEqual(code, 1)
            self.assertIn("FAIL", out)
        finally:
            os.unlink(f.name)


class Spectra(unittest.TestCase):
    def test_edge_graph_laplacian(self):
        code, out, _ = run("spectra", "--input", data("edge.hg"), "--degrees", "0", "--output", "json")
        self.assertEqual(code, 0)
        full = json.loads(out)["degrees"][0]["spectra"]["ambient"]["full"]
        self.assertEqual([m for _, m in full], [1, 1])
        for (value, _), expected in zip(full, [0.0, 2.0]):
            self.assertAlmostEqual(value, expected, delta=1e-9)

    def test_csv_rows(self):
        code, out, _ = run("spectra", "--input", data("edge.hg"), "--degrees", "0", "--output", "csv")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "n,carrier,operator,eigenvalue,multiplicity")
        self.assertIn("0,ambient,full,2,1", lines)

    def test_backends_agree(self):
        code, out, err = run("spectra", "--input", data("skeleton3.hg"), "--backend", "both", "--output", "json")
        self.assertEqual(code, 0, err)
        self.assertEqual(json.loads(out)["backend_mismatches"], [])


class ValidateWeight(unittest.TestCase):
    def test_imbalanced_table_is_valid(self):
        code, out, _ = run("validate-weight", "--input", data("hollow_triangle.hg"), "--weight",
                           data("imbalanced_table.json"))
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "valid")

    def test_missing_pair_named(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump({"kind": "table", "values": {"v0 v1|v0": 1}}, f)
        try:
            code, _, err = run("validate-weight", "--input", data("hollow_triangle.hg"), "--weight", f.name)
            self.assertEqual(code, 2)
            self.assertIn("v0 v1|v1", err)
        finally:
            os.unlink(f.name)


class FromDigraph(unittest.TestCase):
    def test_chain(self):
        code, out, _ = run("from-digraph", "--input", data("chain3.dg"))
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 6)

    def test_max_len(self):
        code, out, _ = run("from-digraph", "--input", data("chain3.dg"), "--max-len", "1")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 5)

    def test_cycle_rejected_with_witness(self):
        code, out, _ = run("from-digraph", "--input", data("two_cycle.dg"))
        self.assertNotEqual(code, 0)
        self.assertIn("a b a", out)

    def test_single_vertex(self):
        code, out, _ = run("from-digraph", "--input", data("single_vertex.dg"))
        self.assertEqual(code, 0)
        self.assertEqual(out.split(), ["a"])

    def test_out_file_round_trips(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "chain.hg")
            code, out, _ = run("from-digraph", "--input", data("chain3.dg"), "--out", path)
            self.assertEqual((code, out), (0, ""))
            code, formatted, _ = run("format", "--input", path)
            with open(path) as f:
                self.assertEqual(formatted, f.read())


class ExitCodes(unittest.TestCase):
    def test_degree_out_of_range(self):
        self.assertEqual(run("betti", "--input", data("fig1.hg"), "--degrees", "9")[0], 2)
        self.assertEqual(run("betti", "--input", data("fig1.hg"), "--degrees", "x")[0], 2)

    def test_missing_file(self):
        self.assertEqual(run("betti", "--input", "/nonexistent.hg")[0], 2)

    def test_unknown_backend(self):
        self.assertEqual(run("betti", "--input", data("edge.hg"), "--backend", "quad")[0], 2)

    def test_no_subcommand(self):
        self.assertEqual(run()[0], 2)

    def test_suite_reports_failures(self):
        code, out, _ = run("suite", "--suite", "diagram", "--seed", "0", "--count", "5", "--output", "json")
        self.assertEqual(code, 1)
        report = json.loads(out)
        self.assertEqual(report["degree_entries"], 75)
        self.assertIn("two_summand_embedded", report["failures"])


if __name__ == "__main__":
    sys.exit(unittest.main(argv=sys.argv[:1], verbosity=2).wasSuccessful() is False)
