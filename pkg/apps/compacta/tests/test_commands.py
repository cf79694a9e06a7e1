import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

ABS_DISTANCE_TO_HALF = {
    "op": "abs",
    "args": [{"op": "sub", "args": [{"op": "var"}, {"op": "const", "value": "1/2"}]}],
}
UNIT_NET = {"net_of_box": {"box": [["0", "1"]], "spacing": "1/64"}}


def problem(command, compacts, **extra):
    data = {"space": "R", "compacts": compacts, "command": command}
    data.update(extra)
    return data


class CommandTestMixin(object):
    def call(self, name, data, *args):
        out = StringIO()
        text = data if isinstance(data, str) else json.dumps(data)
        call_command(name, "-", *args, stdin=StringIO(text), stdout=out)
        return json.loads(out.getvalue()), out.getvalue()

    def call_failing(self, name, data, *args):
        out = StringIO()
        text = data if isinstance(data, str) else json.dumps(data)
        with self.assertRaises(CommandError) as caught:
            call_command(name, "-", *args, stdin=StringIO(text), stdout=out)
        return caught.exception.returncode, json.loads(out.getvalue())["error"]


class SolveCommandTest(CommandTestMixin, SimpleTestCase):
    def test_dist(self):
        report, _text = self.call("solve", problem("dist", [{"points": [0, 1]}, {"points": ["1/2"]}]))
        self.assertEqual(report["command"], "dist")
        distance = report["result"]["distance"]
        self.assertEqual(distance["rational"], "1/2")
        self.assertEqual(distance["decimal"], "0.500000")
        self.assertTrue(distance["exact"])
        self.assertEqual(report["budget"]["limit"], 64)

    def test_sup_and_inf(self):
        report, _text = self.call("solve", problem("sup", [UNIT_NET]))
        self.assertEqual(report["result"]["sup"]["rational"], "1")
        report, _text = self.call("solve", problem("inf", [{"points": ["-1", "1/2", "2"]}]))
        self.assertEqual(report["result"]["inf"]["rational"], "-1")

    def test_sup_of_a_box_is_rendered_coarsely(self):
        report, _text = self.call("solve", problem("sup", [{"box": [[0, 1]]}]))
        sup = report["result"]["sup"]
        self.assertFalse(sup["exact"])
        self.assertEqual(sup["rational"], "1")
        self.assertEqual(sup["error"], "1/64")

    def test_union(self):
        report, _text = self.call("solve", problem("union", [{"points": [0]}, {"points": [1]}]))
        result = report["result"]
        self.assertTrue(result["finite"])
        self.assertEqual(result["net"]["size"], 2)
        self.assertEqual((result["sup"]["rational"], result["inf"]["rational"]), ("1", "0"))

    def test_split(self):
        net = {"net_of_box": {"box": [[0, 1]], "spacing": "1/16"}}
        report, _text = self.call("solve", problem("split", [net], params={"x": 3, "epsilon": "1/4"}))
        self.assertEqual(report["result"], {"tag": "Miss"})
        report, _text = self.call("solve", problem("split", [net], params={"x": "1/2", "epsilon": "1/4"}))
        piece = report["result"]["piece"]
        self.assertEqual(report["result"]["tag"], "Piece")
        self.assertEqual(piece["net"]["size"], 13)
        self.assertEqual((piece["sup"]["rational"], piece["inf"]["rational"]), ("7/8", "1/8"))

    def test_member(self):
        compacts = [{"points": [0, 1]}]
        report, _text = self.call("solve", problem("member", compacts, params={"x": 0, "tol": "1/8"}))
        self.assertEqual(report["result"]["verdict"], "LessThanB")
        report, _text = self.call("solve", problem("member", compacts, params={"x": 5, "tol": "1/8"}))
        self.assertEqual(report["result"]["verdict"], "GreaterThanA")

    def test_image(self):
        data = problem(
            "image",
            [{"net_of_box": {"box": [[0, 1]], "spacing": "1/4"}}],
            function={"op": "scale", "factor": "2", "args": [{"op": "var"}]},
            params={"y": "1", "epsilon": "1/10"},
        )
        report, _text = self.call("solve", data)
        self.assertEqual(report["result"]["sup"]["rational"], "2")
        self.assertEqual(report["result"]["near"], ["1/2"])

    def test_plane(self):
        data = {
            "space": {"Rn": 2},
            "compacts": [{"points": [[0, 0]]}, {"points": [[1, "1/2"]]}],
            "command": "dist",
        }
        report, _text = self.call("solve", data)
        self.assertEqual(report["result"]["distance"]["rational"], "1")

    def test_check_reports_no_violations(self):
        data = problem("check", [UNIT_NET], function=ABS_DISTANCE_TO_HALF, params={"epsilon": "1/10"})
        report, _text = self.call("solve", data, "--check-soundness", "1000", "--seed", "3")
        result = report["result"]
        self.assertNotIn(result["delta"], ("", "0"))
        self.assertEqual(result["epsilon"], "1/10")
        self.assertEqual(result["soundness"]["pairs"], 1000)
        self.assertEqual(result["soundness"]["violations"], 0)

    def test_check_on_a_box_samples_distinct_pairs(self):
        data = problem("check", [{"box": [["0", "1/8"]]}], function=ABS_DISTANCE_TO_HALF, params={"epsilon": "1/2"})
        report, _text = self.call("solve", data, "--check-soundness", "200", "--seed", "5")
        soundness = report["result"]["soundness"]
        self.assertEqual(soundness["violations"], 0)
        self.assertGreater(soundness["distinct"], 100)

    def test_output_is_reproducible(self):
        data = problem("check", [UNIT_NET], function=ABS_DISTANCE_TO_HALF, params={"epsilon": "1/2", "seed": 9})
        _report, first = self.call("solve", data, "--check-soundness", "200")
        _report, second = self.call("solve", data, "--check-soundness", "200")
        self.assertEqual(first, second)
        self.assertTrue(first.endswith("}\n"))


class FlagTest(CommandTestMixin, SimpleTestCase):
    def test_flags_win_over_params(self):
        data = problem("sup", [UNIT_NET], params={"budget": 32})
        report, _text = self.call("solve", data)
        self.assertEqual(report["budget"]["limit"], 32)
        report, _text = self.call("solve", data, "--budget", "16", "--precision", "8")
        self.assertEqual(report["budget"]["limit"], 16)
        self.assertEqual(report["precision"], 8)
        self.assertEqual(report["result"]["sup"]["decimal"], "1.000")

    def test_trace_and_timing(self):
        data = problem("modulus", [UNIT_NET], function=ABS_DISTANCE_TO_HALF, params={"epsilon": "1/2"})
        report, _text = self.call("solve", data, "--trace", "--timing")
        self.assertIn("timing", report)
        events = report["result"]["trace"]
        self.assertEqual(events[-1]["event"], "recursion")

    def test_dedicated_commands_fix_the_action(self):
        data = problem("sup", [UNIT_NET], function=ABS_DISTANCE_TO_HALF, params={"epsilon": "1/2"})
        report, _text = self.call("modulus", data)
        self.assertEqual(report["command"], "modulus")
        self.assertNotIn("soundness", report["result"])
        report, _text = self.call("soundness", data, "--check-soundness", "50")
        self.assertEqual(report["command"], "check")
        self.assertEqual(report["result"]["soundness"]["pairs"], 50)


class ErrorTest(CommandTestMixin, SimpleTestCase):
    def test_validation_errors_carry_a_pointer(self):
        unary_add = {"op": "add", "args": [{"op": "var"}]}
        cases = [
            (problem("modulus", [UNIT_NET], function=ABS_DISTANCE_TO_HALF), "/params/epsilon"),
            (
                problem("modulus", [UNIT_NET], function=ABS_DISTANCE_TO_HALF, params={"epsilon": "abc"}),
                "/params/epsilon",
            ),
            (problem("modulus", [UNIT_NET], function=unary_add, params={"epsilon": 1}), "/function/args"),
            (problem("sup", [{"net_of_box": {"box": [[1, 0]], "spacing": "1/4"}}]), "/compacts/0/net_of_box/box/0"),
            (problem("dist", [UNIT_NET]), "/compacts"),
            (problem("integrate", [UNIT_NET]), "/command"),
            (problem("split", [UNIT_NET], params={"x": [0, 1], "epsilon": 1}), "/params/x"),
        ]
        for data, pointer in cases:
            with self.subTest(pointer=pointer):
                code, error = self.call_failing("solve", data)
                self.assertEqual(code, 3)
                self.assertEqual(error["code"], "invalid")
                self.assertEqual(error["pointer"], pointer)

    def test_unreadable_input(self):
        code, error = self.call_failing("solve", "{")
        self.assertEqual(code, 3)
        self.assertEqual(error["pointer"], "")

    def test_budget_exhaustion(self):
        data = problem(
            "image",
            [{"net_of_box": {"box": [[0, 1]], "spacing": "1/4"}}],
            function={"op": "var"},
            params={"y": 10, "epsilon": "1/10"},
        )
        code, error = self.call_failing("solve", data)
        self.assertEqual(code, 2)
        self.assertEqual(error["code"], "budget_exceeded")
