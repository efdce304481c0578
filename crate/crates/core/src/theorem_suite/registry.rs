use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Every classification statement checked by the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    Diam2EdgeEqMinDeg,
    Whitney,
    CompleteStarMinimal,
    CommutingCompleteIffAbelian,
    CoprimeCompleteIffOrderLe2,
    OrderSumCompleteIffPrime,
    NonInverseCompleteIffSelfInverse,
    NonInverseKappaEq,
    DominatingCriterion,
    OrderSumNullIfNoncyclic,
    OrderSumEdgeIffPrime,
    NonInverseEdgeIffUniformInverse,
    CommutingEdgeIffAbelian,
    CommutingVertexIffAbelian,
    OrderSumVertexIffPrimePower,
    NonInverseVertexIffUniformInverse,
    CoprimeFullExpIffPGroup,
    CoprimeEvenNotMinimal,
    CoprimeVertexIffPGroup,
    TreeClaim,
}

/// How `lhs` (graph property) and `rhs` (hypothesis) must relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LogicalForm {
    Iff,
    /// `rhs => lhs`
    Implies,
}

impl LogicalForm {
    pub fn consistent(self, lhs: bool, rhs: bool) -> bool {
        match self {
            LogicalForm::Iff => lhs == rhs,
            LogicalForm::Implies => !rhs || lhs,
        }
    }
}

/// Which groups a claim speaks about; others are recorded as skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    AllGroups,
    CyclicGroups,
    FullExponentGroups,
    /// Connected, non-complete graphs with a dominating vertex.
    DominatedNonComplete,
}

/// What the claim is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    Commuting,
    Coprime,
    OrderSum,
    NonInverse,
    /// Pure graph statement checked on all four graphs of each group.
    EveryGraph,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClaimSpec {
    pub id: ClaimId,
    pub subject: Subject,
    pub form: LogicalForm,
    pub scope: Scope,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub note: Option<&'static str>,
}

use LogicalForm::{Iff, Implies};
use Scope::*;

pub const REGISTRY: [ClaimSpec; 20] = [
    ClaimSpec {
        id: ClaimId::Diam2EdgeEqMinDeg,
        subject: Subject::EveryGraph,
        form: Implies,
        scope: AllGroups,
        lhs: "edge connectivity equals minimum degree",
        rhs: "graph is connected with diameter at most 2",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::Whitney,
        subject: Subject::EveryGraph,
        form: Implies,
        scope: AllGroups,
        lhs: "vertex connectivity <= edge connectivity <= minimum degree",
        rhs: "graph is simple",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CompleteStarMinimal,
        subject: Subject::EveryGraph,
        form: Implies,
        scope: AllGroups,
        lhs: "minimally edge connected and minimally connected",
        rhs: "graph is complete or a star on at least 2 vertices",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CommutingCompleteIffAbelian,
        subject: Subject::Commuting,
        form: Iff,
        scope: AllGroups,
        lhs: "commuting graph is complete",
        rhs: "group is abelian",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CoprimeCompleteIffOrderLe2,
        subject: Subject::Coprime,
        form: Iff,
        scope: AllGroups,
        lhs: "co-prime graph is complete",
        rhs: "group order is at most 2",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::OrderSumCompleteIffPrime,
        subject: Subject::OrderSum,
        form: Iff,
        scope: AllGroups,
        lhs: "order-sum graph is complete",
        rhs: "group is cyclic of prime order",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::NonInverseCompleteIffSelfInverse,
        subject: Subject::NonInverse,
        form: Iff,
        scope: AllGroups,
        lhs: "non-inverse graph is complete",
        rhs: "every element is its own inverse",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::NonInverseKappaEq,
        subject: Subject::NonInverse,
        form: Implies,
        scope: AllGroups,
        lhs: "vertex connectivity equals edge connectivity",
        rhs: "any group",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::DominatingCriterion,
        subject: Subject::EveryGraph,
        form: Iff,
        scope: DominatedNonComplete,
        lhs: "minimally edge connected (deletion sweep)",
        rhs: "unique dominating vertex x and G - x regular",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::OrderSumNullIfNoncyclic,
        subject: Subject::OrderSum,
        form: Implies,
        scope: AllGroups,
        lhs: "order-sum graph has no edges",
        rhs: "group is not cyclic",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::OrderSumEdgeIffPrime,
        subject: Subject::OrderSum,
        form: Iff,
        scope: CyclicGroups,
        lhs: "order-sum graph is minimally edge connected",
        rhs: "group order is prime",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::NonInverseEdgeIffUniformInverse,
        subject: Subject::NonInverse,
        form: Iff,
        scope: AllGroups,
        lhs: "non-inverse graph is minimally edge connected",
        rhs: "non-identity elements are all self-inverse or none are",
        note: Some(
            "with no self-inverse non-identity element the graph is complete minus a perfect matching on the \
             non-identity elements, not a star",
        ),
    },
    ClaimSpec {
        id: ClaimId::CommutingEdgeIffAbelian,
        subject: Subject::Commuting,
        form: Iff,
        scope: AllGroups,
        lhs: "commuting graph is minimally edge connected",
        rhs: "group is abelian",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CommutingVertexIffAbelian,
        subject: Subject::Commuting,
        form: Iff,
        scope: AllGroups,
        lhs: "commuting graph is minimally connected",
        rhs: "group is abelian",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::OrderSumVertexIffPrimePower,
        subject: Subject::OrderSum,
        form: Iff,
        scope: AllGroups,
        lhs: "order-sum graph is minimally connected",
        rhs: "group order is a prime power",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::NonInverseVertexIffUniformInverse,
        subject: Subject::NonInverse,
        form: Iff,
        scope: AllGroups,
        lhs: "non-inverse graph is minimally connected",
        rhs: "non-identity elements are all self-inverse or none are",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CoprimeFullExpIffPGroup,
        subject: Subject::Coprime,
        form: Iff,
        scope: FullExponentGroups,
        lhs: "co-prime graph is minimally edge connected",
        rhs: "group is a p-group",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CoprimeEvenNotMinimal,
        subject: Subject::Coprime,
        form: Implies,
        scope: AllGroups,
        lhs: "co-prime graph is not minimally edge connected",
        rhs: "group has even order and is not a p-group",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::CoprimeVertexIffPGroup,
        subject: Subject::Coprime,
        form: Iff,
        scope: AllGroups,
        lhs: "co-prime graph is minimally connected",
        rhs: "group is a p-group",
        note: None,
    },
    ClaimSpec {
        id: ClaimId::TreeClaim,
        subject: Subject::EveryGraph,
        form: Iff,
        scope: AllGroups,
        lhs: "minimally connected (deletion sweep)",
        rhs: "graph is a tree",
        note: Some("contradicts complete graphs being minimally connected whenever n >= 3"),
    },
];

impl ClaimId {
    pub const ALL: [ClaimId; 20] = {
        let mut ids = [ClaimId::Whitney; 20];
        let mut i = 0;
        while i < 20 {
            ids[i] = REGISTRY[i].id;
            i += 1;
        }
        ids
    };

    pub fn spec(self) -> &'static ClaimSpec {
        REGISTRY.iter().find(|s| s.id == self).expect("every id is registered")
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Diam2EdgeEqMinDeg => "DIAM2_EDGE_EQ_MINDEG",
            ClaimId::Whitney => "WHITNEY",
            ClaimId::CompleteStarMinimal => "L31_COMPLETE_STAR_MINIMAL",
            ClaimId::CommutingCompleteIffAbelian => "L32_COMMUTING_COMPLETE_IFF_ABELIAN",
            ClaimId::CoprimeCompleteIffOrderLe2 => "L_CP_COMPLETE_IFF_ORDER_LE_2",
            ClaimId::OrderSumCompleteIffPrime => "L34_OS_COMPLETE_IFF_PRIME",
            ClaimId::NonInverseCompleteIffSelfInverse => "L35_NI_COMPLETE_IFF_SELF_INVERSE",
            ClaimId::NonInverseKappaEq => "L_NI_KAPPA_EQ",
            ClaimId::DominatingCriterion => "P_DOMINATING_CRITERION",
            ClaimId::OrderSumNullIfNoncyclic => "P_OS_NULL_IF_NONCYCLIC",
            ClaimId::OrderSumEdgeIffPrime => "T_OS_EDGE_IFF_PRIME",
            ClaimId::NonInverseEdgeIffUniformInverse => "T_NI_EDGE_IFF_UNIFORM_INVERSE",
            ClaimId::CommutingEdgeIffAbelian => "T_C_EDGE_IFF_ABELIAN",
            ClaimId::CommutingVertexIffAbelian => "T_C_VERTEX_IFF_ABELIAN",
            ClaimId::OrderSumVertexIffPrimePower => "T_OS_VERTEX_IFF_PRIME_POWER",
            ClaimId::NonInverseVertexIffUniformInverse => "T_NI_VERTEX_IFF_UNIFORM_INVERSE",
            ClaimId::CoprimeFullExpIffPGroup => "P_CP_FULL_EXP_IFF_P_GROUP",
            ClaimId::CoprimeEvenNotMinimal => "T_CP_EVEN_NOT_MINIMAL",
            ClaimId::CoprimeVertexIffPGroup => "T_CP_VERTEX_IFF_P_GROUP",
            ClaimId::TreeClaim => "X_TREE_CLAIM",
        }
    }

    /// Parses a comma-separated list of ids.
    pub fn parse_list(s: &str) -> Result<Vec<ClaimId>, String> {
        s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown claim id '{s}'"))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}
