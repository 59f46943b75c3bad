"""Exception types raised by the library.

Every error derives from :class:`PlanarCubeError` (itself a ``ValueError``) so
callers can catch the whole family at once.  Errors that carry a certificate
expose it as an attribute.
"""


class PlanarCubeError(ValueError):
    pass


# graph construction / lookup
class DuplicateVertex(PlanarCubeError):
    pass


class UnknownEndpoint(PlanarCubeError):
    pass


class LoopEdge(PlanarCubeError):
    pass


class UnknownVertex(PlanarCubeError):
    pass


class UnknownEdge(PlanarCubeError):
    pass


# partial cubes
class NotConnected(PlanarCubeError):
    pass


class NotPartialCube(PlanarCubeError):
    def __init__(self, refutation=None, message="graph is not a partial cube"):
        super().__init__(message if refutation is None else f"{message}: {refutation.kind}")
        self.refutation = refutation


class UnknownClass(PlanarCubeError):
    pass


# expansions
class NotCovering(PlanarCubeError):
    pass


class NotIsometric(PlanarCubeError):
    def __init__(self, side, pair):
        super().__init__(f"side {side} is not isometric: witness pair {pair!r}")
        self.side = side
        self.pair = pair


class EmptyIntersection(PlanarCubeError):
    pass


# embeddings
class InvalidRotation(PlanarCubeError):
    pass


class NotGenusZero(PlanarCubeError):
    pass


class NotPlanarInput(PlanarCubeError):
    pass


class UnknownFace(PlanarCubeError):
    pass


class FaceWithOddCutEdges(PlanarCubeError):
    pass


class NotPlanar(PlanarCubeError):
    def __init__(self, witness):
        super().__init__(f"graph is not planar ({witness.kind} subdivision found)")
        self.witness = witness


# decomposition
class InvalidStep(PlanarCubeError):
    def __init__(self, index, reason):
        super().__init__(f"InvalidStep at step {index}: {reason}")
        self.index = index
        self.reason = reason


class NotFound(PlanarCubeError):
    pass


# generators
class OddCycleRequested(PlanarCubeError):
    pass


class ParameterTooSmall(PlanarCubeError):
    pass


class SamplingExhausted(PlanarCubeError):
    pass
