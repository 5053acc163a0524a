//! Four-way classification of a body's minimum quadrilateral and the factor
//! it certifies.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{CertifiedComparison, Expr, DEFAULT_PRECISION};
use crate::geom::{contains_polygon, linf_distance_to_polygon, AffineMap2, ConvexPolygon};
use crate::minquad::{solve, Quadrilateral, SolverOptions};
use crate::pipeline::balls::outer_ball_check;
use crate::pipeline::constants::{all_proven, certify_constants, f64_upper, ConstantValues, PaperConstants};
use crate::pipeline::lemma::{lemma_octagon_quad, Branch};
use crate::pipeline::scene::{axis_box_with_contacts, build_octagon, normalize_to_square};

/// Absolute slack in normalized coordinates for the structural checks
/// (contact bounds, octagon inside the body, outer ball).
const STRUCTURE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseId {
    /// `x·y > 8c1`.
    BoxLarge,
    /// `x > c2·y` or `y > c2·x`.
    BoxSkewed,
    /// Some vertex of the body is farther than `r` from the octagon.
    BodyExceedsOctagon,
    /// None of the above; the corner-cut quadrangle scaled by `1 + r` beats `Q`.
    OctagonImproved,
    /// The body is a triangle and is its own minimum quadrilateral.
    DegenerateTriangle,
}

impl CaseId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::BoxLarge => "BOX_LARGE",
            CaseId::BoxSkewed => "BOX_SKEWED",
            CaseId::BodyExceedsOctagon => "BODY_EXCEEDS_OCTAGON",
            CaseId::OctagonImproved => "OCTAGON_IMPROVED",
            CaseId::DegenerateTriangle => "DEGENERATE_TRIANGLE",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Measurements behind the classification, in normalized coordinates.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CaseDetails {
    pub x: Option<f64>,
    pub y: Option<f64>,
    pub box_area: Option<f64>,
    pub octagon_area: Option<f64>,
    pub normalized_body_area: Option<f64>,
    /// Largest max-norm distance from a body vertex to the octagon.
    pub max_octagon_distance: Option<f64>,
    /// `r` minus that distance.
    pub r_slack: Option<f64>,
    pub lemma_branch: Option<Branch>,
    /// `(1 + r)²|Q̃|` when the corner-cut quadrangle was built.
    pub improved_area: Option<f64>,
    /// Normalized `Q` inside `3·B∞`.
    pub outer_ball_ok: Option<bool>,
    /// `|Q| ≤ √(2|P||Q′|) ≤ √2|octagon| ≤ √2|K|` up to `1e-9` relative.
    pub estimate_chain_ok: Option<bool>,
    pub normalizing_map: Option<AffineMap2<f64>>,
    pub midpoint_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub case_id: CaseId,
    /// Proven multiplier of `√2` bounding `|Q|/|K|`.
    pub certified_factor: f64,
    /// Circumscribed quadrilateral in the body's own coordinates.
    pub witness: Quadrilateral<f64>,
    pub area_k: f64,
    pub area_q: f64,
    /// `area_q / area_k`.
    pub empirical_ratio: f64,
    pub details: CaseDetails,
}

/// Upper bounds (rounded up to `f64`) of the per-case factors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CaseFactors {
    pub box_large: f64,
    pub box_skewed: f64,
    pub body_exceeds: f64,
}

impl CaseFactors {
    /// The factor valid regardless of which of the three cases applies.
    pub fn worst(&self) -> f64 {
        self.box_large.max(self.box_skewed).max(self.body_exceeds)
    }
}

/// Certified constants ready to classify bodies.
#[derive(Clone, Debug)]
pub struct CaseMachine {
    constants: PaperConstants,
    values: ConstantValues,
    factors: CaseFactors,
    certificate: Vec<CertifiedComparison>,
}

impl CaseMachine {
    /// Certifies `constants` at `precision_bits`; fails unless every comparison is proven.
    pub fn new(constants: PaperConstants, precision_bits: u32) -> Result<Self> {
        let certificate = certify_constants(&constants, precision_bits)?;
        if !all_proven(&certificate) {
            let failed: Vec<&str> =
                certificate.iter().filter(|c| !c.is_proven()).map(|c| c.name.as_str()).collect();
            return Err(Error::BadParams(format!("constants not certified: {}", failed.join(", "))));
        }
        let upper = |e: Expr| -> Result<f64> { Ok(f64_upper(e.eval(precision_bits)?.hi())) };
        let factors = CaseFactors {
            box_large: upper(constants.box_large_factor())?,
            box_skewed: upper(constants.box_skewed_factor())?,
            body_exceeds: upper(constants.body_exceeds_factor())?,
        };
        let values = ConstantValues::from_constants(&constants)?;
        Ok(Self { constants, values, factors, certificate })
    }

    pub fn constants(&self) -> &PaperConstants {
        &self.constants
    }

    pub fn values(&self) -> &ConstantValues {
        &self.values
    }

    pub fn factors(&self) -> &CaseFactors {
        &self.factors
    }

    pub fn certificate(&self) -> &[CertifiedComparison] {
        &self.certificate
    }

    /// Solves for the minimum quadrilateral and classifies it.
    pub fn run(&self, body: &ConvexPolygon<f64>, opts: &SolverOptions) -> Result<CaseReport> {
        let solution = solve(body, opts)?;
        let quad = solution.quad;
        let area_k = body.area();
        let mut details = CaseDetails { midpoint_residual: solution.certificate.max_residual(), ..Default::default() };
        if quad.is_degenerate() {
            let area_q = quad.area();
            return Ok(CaseReport {
                case_id: CaseId::DegenerateTriangle,
                certified_factor: std::f64::consts::FRAC_1_SQRT_2,
                witness: quad,
                area_k,
                area_q,
                empirical_ratio: area_q / area_k,
                details,
            });
        }

        let (scene, map) = normalize_to_square(body, &quad)?;
        let contacts = axis_box_with_contacts(&scene.body, &STRUCTURE_TOL)?;
        let octagon = build_octagon(&scene.body, &contacts, &map, &STRUCTURE_TOL)?;
        let (x, y) = (contacts.x, contacts.y);
        let area_qn = scene.quad.area();
        let area_kn = scene.body.area();
        let max_dist = scene
            .body
            .vertices()
            .iter()
            .map(|v| linf_distance_to_polygon(v, &octagon.octagon))
            .fold(0.0, f64::max);
        let chain = 1.0 + 1e-9;
        details.x = Some(x);
        details.y = Some(y);
        details.box_area = Some(x * y);
        details.octagon_area = Some(octagon.area_o);
        details.normalized_body_area = Some(area_kn);
        details.max_octagon_distance = Some(max_dist);
        details.r_slack = Some(self.values.r - max_dist);
        details.outer_ball_ok = Some(outer_ball_check(&scene.quad, &STRUCTURE_TOL));
        details.estimate_chain_ok = Some(
            area_qn <= (8.0 * x * y).sqrt() * chain
                && (8.0 * x * y).sqrt() <= std::f64::consts::SQRT_2 * (x + y) * chain
                && octagon.area_o <= area_kn * chain,
        );
        details.normalizing_map = Some(map.clone());

        let slack = 1.0 + 10.0 * opts.tol;
        let v = &self.values;
        let (case_id, factor, witness) = if x * y > 8.0 * v.c1 * slack {
            (CaseId::BoxLarge, self.factors.box_large, quad)
        } else if x > v.c2 * y * slack || y > v.c2 * x * slack {
            (CaseId::BoxSkewed, self.factors.box_skewed, quad)
        } else if max_dist > v.r * slack {
            (CaseId::BodyExceedsOctagon, self.factors.body_exceeds, quad)
        } else {
            let improved = lemma_octagon_quad(&contacts, &v.c3, &v.delta)?;
            details.lemma_branch = Some(improved.branch);
            let scaled = improved.quad.scale(&(1.0 + v.r))?;
            let scaled_area = scaled.area();
            details.improved_area = Some(scaled_area);
            if scaled_area >= 8.0 {
                return Err(Error::InconsistentCase(format!("(1 + r)^2 |Q~| = {scaled_area} >= 8")));
            }
            if !contains_polygon(&scaled.to_polygon(), &scene.body, &STRUCTURE_TOL) {
                return Err(Error::InconsistentCase("(1 + r) Q~ does not contain the body".into()));
            }
            let back = scaled.apply_affine(&map.inverse()?)?;
            (CaseId::OctagonImproved, self.factors.worst(), back)
        };
        let area_q = witness.area();
        Ok(CaseReport {
            case_id,
            certified_factor: factor,
            witness,
            area_k,
            area_q,
            empirical_ratio: area_q / area_k,
            details,
        })
    }
}

/// Certifies `constants` at the default precision and classifies `body`.
pub fn case_machine(body: &ConvexPolygon<f64>, constants: &PaperConstants, opts: &SolverOptions) -> Result<CaseReport> {
    CaseMachine::new(constants.clone(), DEFAULT_PRECISION)?.run(body, opts)
}
