from .problem.command import BaseProblemCommand


class Command(BaseProblemCommand):
    help = "Run the command named in a problem file"
