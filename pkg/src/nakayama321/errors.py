"""Exception hierarchy shared by all modules."""


class NakayamaError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(NakayamaError):
    pass


class BadAlphabet(ParseError):
    pass


class NonLatticeWord(NakayamaError):
    """Step word is unbalanced or dips below the axis."""


class EmptyPath(NakayamaError):
    pass


class Not321Avoiding(NakayamaError):
    pass


class IdentityNotCovered(NakayamaError):
    """The closed formula excludes the identity permutation."""


class KupischError(NakayamaError):
    pass


class LastNotOne(KupischError):
    pass


class EntryBelowTwo(KupischError):
    pass


class DropTooSteep(KupischError):
    pass


class OverhangsQuiver(KupischError):
    pass


class BadModule(NakayamaError):
    pass


class ZeroModule(NakayamaError):
    pass


class BadShape(NakayamaError):
    pass
