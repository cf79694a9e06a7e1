from apps.compacta.services.actions import Action

from .problem.command import BaseProblemCommand


class Command(BaseProblemCommand):
    help = "Extract a modulus and sample its soundness"
    action = Action.check.value
