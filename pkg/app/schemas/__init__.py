from .report import (
    AntiBallReport,
    AxiomCheck,
    AxiomReport,
    CheckRecord,
    CompactnessReport,
    CompletenessDiagnostic,
    ContinuityReport,
    ContinuityTrace,
    ConvergenceVerdict,
    EquivalenceReport,
    EquivalenceRow,
    FamilyRoundTripReport,
    ImplicationCheck,
    ImplicationReport,
    LemmaReport,
    ReconstructionPoint,
    ReconstructionResult,
    RieszWitness,
    RunReport,
    SubspaceDistance,
    Verdict,
)
from .spec_file import BaseNormSpec, SpaceSpecFile, load_spec_file
