class TarsisError(Exception):
    pass


class ConcreteError(TarsisError):
    """A concrete run stopped on a runtime error."""


class CyclicAutomaton(TarsisError):
    """An operation that enumerates paths was handed a cyclic automaton."""


class EmptyLanguage(TarsisError):
    pass


class BottomInput(TarsisError):
    """An abstract string operation received the bottom element."""


class Diverged(TarsisError):
    """The abstract fixpoint exceeded its iteration cap."""


class OutOfFuel(TarsisError):
    pass


class SubstringOutOfRange(ConcreteError):
    pass


class ConcreteTypeError(ConcreteError):
    pass


class UnboundVariable(ConcreteError):
    pass


class DivisionByZero(ConcreteError):
    pass
