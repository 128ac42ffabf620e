"""Exception hierarchy shared by every module."""


class TopsnutError(Exception):
    """Base class for all library errors."""


class GraphError(TopsnutError):
    pass


class UnknownVertex(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class EmptyPartitionSide(GraphError):
    pass


class OverlappingNeighborhoods(GraphError):
    pass


class ConditionViolation(GraphError):
    """Raised by edge coincidence; ``failed`` lists the violated checks."""

    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__("failed checks: " + ", ".join(self.failed))


class Disconnected(GraphError):
    pass


class SizeLimitExceeded(GraphError):
    pass


class OddDegreeVertex(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has odd degree")


class AlreadyEulerian(GraphError):
    pass


class NotATree(GraphError):
    pass


class ThresholdOutOfRange(GraphError):
    pass


class LabellingError(TopsnutError):
    pass


class MissingLabel(LabellingError):
    pass


class UnknownScheme(LabellingError):
    pass


class NotSetOrdered(LabellingError):
    pass


class NotACaterpillar(LabellingError):
    pass


class PlanTargetsUnknownVertex(LabellingError):
    pass


class SizeMismatch(LabellingError):
    pass


class ComplementarityViolation(LabellingError):
    def __init__(self, labels):
        self.labels = sorted(labels)
        super().__init__(f"offending labels: {self.labels}")


class EdgeSetMismatch(LabellingError):
    pass


class BadSequenceParams(LabellingError):
    pass


class EmptyLabelling(LabellingError):
    pass


class SchemeViolation(LabellingError):
    pass


class MatrixError(TopsnutError):
    pass


class BadPermutation(MatrixError):
    pass


class RouteSizeMismatch(MatrixError):
    pass


class IndexOutOfRange(TopsnutError):
    pass


class InconsistentSharedLabels(MatrixError):
    pass


class NegativeArgument(TopsnutError):
    pass


class TbPawError(TopsnutError):
    pass


class NotAWalk(TbPawError):
    pass


class NotAPath(TbPawError):
    pass


class NotACycle(TbPawError):
    pass


class NotALobster(TbPawError):
    pass


class NotASpider(TbPawError):
    pass


class NonDecodable(TbPawError):
    pass


class GroupError(TopsnutError):
    pass


class BadOrder(GroupError):
    pass


class SequenceLengthMismatch(GroupError):
    pass


class DegenerateParameters(GroupError):
    pass


class NoCycleColoring(GroupError):
    pass


class NotGroupLabelled(GroupError):
    pass


class InvalidColoring(GroupError):
    pass


class BadSteps(GroupError):
    pass
