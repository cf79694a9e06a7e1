from apps.compacta.services.actions import Action

from .problem.command import BaseProblemCommand


class Command(BaseProblemCommand):
    help = "Extract a uniform continuity modulus"
    action = Action.modulus.value
