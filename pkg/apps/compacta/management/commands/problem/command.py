import json
import sys
import uuid

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.common.core.exception import common_exception_handler
from apps.compacta.serializers import ProblemSpecSerializer
from apps.compacta.services.report import dump_report
from apps.compacta.services.runner import ProblemRunner
from server.utils import clear_current_run, set_current_run


class BaseProblemCommand(BaseCommand):
    help = "Problem Base Command"

    # None takes the command from the problem file
    action = None
    requires_system_checks = []
    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        parser.add_argument("problem", help="problem JSON file, '-' reads stdin")
        parser.add_argument(
            "--precision",
            type=int,
            default=settings.COMPACTA_OUTPUT_PRECISION,
            help="binary digits of rendered reals",
        )
        parser.add_argument("--budget", type=int, help="round limit of every search")
        parser.add_argument(
            "--check-soundness", dest="check_soundness", type=int, metavar="N", help="sample N member pairs"
        )
        parser.add_argument("--seed", type=int, help="sampling seed")
        parser.add_argument("--trace", action="store_true", help="include the extraction trace")
        parser.add_argument("--timing", action="store_true", help="include wall time, breaks byte equality")

    def load_problem(self, path, stdin=None):
        if path == "-":
            return json.load(stdin or sys.stdin)
        with open(path, "rt", encoding="utf8") as f:
            return json.load(f)

    def handle(self, *args, **options):
        set_current_run(f"{self.action or 'solve'}-{uuid.uuid4().hex[:8]}")
        stage = "parse"
        try:
            data = self.load_problem(options["problem"], options.get("stdin"))
            stage = "validate"
            if self.action and isinstance(data, dict):
                data = dict(data, command=self.action)
            serializer = ProblemSpecSerializer(data=data)
            serializer.is_valid(raise_exception=True)
            stage = "run"
            runner = ProblemRunner(
                serializer.validated_data,
                precision=options["precision"],
                budget=options.get("budget"),
                samples=options.get("check_soundness"),
                seed=options.get("seed"),
                trace=options.get("trace", False),
                timing=options.get("timing", False),
            )
            report = runner.run()
        except Exception as exc:
            handled = common_exception_handler(exc, {"command": self.action or "solve", "stage": stage})
            if handled is None:
                raise
            payload, code = handled
            self.stdout.write(dump_report({"error": payload}), ending="")
            raise CommandError(payload["detail"], returncode=code) from exc
        finally:
            clear_current_run()
        self.stdout.write(dump_report(report), ending="")
