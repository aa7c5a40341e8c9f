"""Exception taxonomy shared by the whole package.

Two failure classes only: bad inputs (caller's fault, detected before any
numerics run) and numeric breakdown (a non-finite value produced at a known
evaluation point).  Everything else is a plain bug and raises whatever it
raises.
"""


class InputError(ValueError):
    """A precondition on user input failed (shape, range, missing handle...)."""


class NumericError(ArithmeticError):
    """A non-finite sample or an otherwise poisoned computation.

    Carries the offending evaluation point in ``node`` when known, so CLI
    diagnostics can report where the integrand blew up.
    """

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node
