"""Mission risk assessment for small uncrewed aircraft.

Two complementary tracks:

* a qualitative worksheet track: hazard records scored on a risk matrix,
  with safeguard performance levels determined on a risk graph,
* a quantitative track: a discrete Bayesian crash model calibrated from
  incident frequency data, queried exactly (variable elimination checked
  against full-joint enumeration), with scenario and tornado analysis.

The `aerorisk` command line and the HTTP service in `aerorisk.service`
expose the same operations over files and JSON.
"""

from .calibration import (
    CrashModelSpec,
    FactorId,
    FactorPrior,
    FrequencyTable,
    assemble_crash_model,
    crash_model_spec_from_doc,
    derive_priors,
    frequency_table_from_doc,
    load_crash_model_spec,
    load_frequency_table,
)
from .cpt_builders import noisy_or_cpt, ranked_aggregation_cpt
from .errors import (
    AeroRiskError,
    ArityError,
    CoverageError,
    CutpointError,
    CycleError,
    DanglingReferenceError,
    MixedTargetsError,
    NoDataForFactorError,
    NormalizationError,
    ParseError,
    RangeError,
    RegistryValidationError,
    ShapeError,
    UnknownFactorError,
    UnknownModelError,
    UnknownNodeError,
    UnknownStateError,
    ZeroEvidenceProbability,
)
from .hazards import (
    DEFAULT_RISK_MATRIX,
    AvoidancePossibility,
    ExposureFrequency,
    HazardRecord,
    HazardSource,
    InjurySeverity,
    LimitCategory,
    MeasureCategory,
    MitigationMeasure,
    PerformanceLevel,
    ProbabilityClass,
    RiskLevel,
    RiskMatrix,
    SeverityClass,
    SFPTriple,
    SystemLimit,
    Violation,
    plr_lookup,
    registry_dump,
    registry_dumps,
    registry_from_doc,
    registry_load,
    registry_loads,
    registry_to_doc,
    risk_matrix_lookup,
    validate_hazard,
    validate_registry,
)
from .inference import (
    Distribution,
    Evidence,
    joint_enumeration_posterior,
    prior_marginal,
    variable_elimination_posterior,
)
from .network import (
    CPT,
    BayesianNetwork,
    NodeKind,
    NodeSpec,
    build_network,
    network_dump,
    network_dumps,
    network_from_doc,
    network_load,
    network_loads,
    network_to_doc,
)
from .report import emit_report
from .scenario import (
    ComparisonReport,
    ComparisonRow,
    Direction,
    Scenario,
    ScenarioResult,
    compare_scenarios,
    diagnostic_query,
    direction_warnings,
    run_scenario,
    scenario_from_doc,
    scenario_load,
    scenario_loads,
    scenario_to_doc,
)
from .sensitivity import TornadoAnalysis, TornadoRow, sensitivity_tornado

from . import fixtures

__version__ = "0.1.0"
