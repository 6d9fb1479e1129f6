from .RationalMatrix_model import ONE, ZERO, Rational, RationalMatrix, Scalar, Vector, as_rational, as_vector
from .Jet2_model import Jet2
from .RootSystem_model import Root, RootSystem, WeightedDiagram
from .ParabolicGrading_model import IrreducibleComponent, LeviComponent, ParabolicGrading
from .MatrixRep_model import Factor, MatrixRep, Subalgebra
from .InvariantPolynomial_model import InvariantPolynomial
from .Analysis_model import AnalysisReport, GenericPoint, InvariantCheck
from .Catalog_model import CatalogEntry, ExpectedFlags, RunSummary, VerificationReport

__all__ = [
    "ONE",
    "ZERO",
    "Rational",
    "RationalMatrix",
    "Scalar",
    "Vector",
    "as_rational",
    "as_vector",
    "Jet2",
    "Root",
    "RootSystem",
    "WeightedDiagram",
    "IrreducibleComponent",
    "LeviComponent",
    "ParabolicGrading",
    "Factor",
    "MatrixRep",
    "Subalgebra",
    "InvariantPolynomial",
    "AnalysisReport",
    "GenericPoint",
    "InvariantCheck",
    "CatalogEntry",
    "ExpectedFlags",
    "RunSummary",
    "VerificationReport",
]
