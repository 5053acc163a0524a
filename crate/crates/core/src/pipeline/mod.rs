//! The constructive improvement argument: normalization, octagon, corner-cut
//! quadrangles, the case machine and the certified constants.

pub mod balls;
pub mod cases;
pub mod constants;
pub mod lemma;
pub mod scene;
pub mod zeta;

pub use balls::{inner_ball_inclusion, outer_ball_check, InnerBallInclusion, LinfBall};
pub use cases::{case_machine, CaseDetails, CaseFactors, CaseId, CaseMachine, CaseReport};
pub use constants::{all_proven, certify_constants, ConstantValues, PaperConstants};
pub use lemma::{
    apply_reflections, lemma_area_bound, lemma_octagon_quad, random_contact_box, reflection_normalize, Branch,
    LemmaQuad, ReflectionFlags,
};
pub use scene::{
    axis_box_with_contacts, build_octagon, contains_unit_square, normalize_to_square, unit_square, ContactBox,
    NormalizedScene, OctagonScene,
};
pub use zeta::{zeta, zeta_bound, zeta_derivative, zeta_derivative_factored, zeta_derivative_numerator, ZetaParams};
