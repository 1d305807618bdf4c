//! The inhomogeneous group ISO(2,1) = ℝ³ ⋊ SO₀(2,1) and its induced
//! representations.
//!
//! Orbit charts and base points:
//! - massive, p₀ > 0: p = m(cosh α, sinh α sin φ, sinh α cos φ), base (m, 0, 0),
//!   h(p) = rotation(φ)·boost02(α), little group rotation(·);
//! - tachyonic: p = κ(sinh α cosh β, sinh α sinh β, cosh α), base (0, 0, κ),
//!   κ = √(−m²), h(p) = boost01(β)·boost02(α), little group boost01(·);
//! - lightlike, p₀ > 0: p = τ((1+a²)/2, a, (1−a²)/2), base (1/2, 0, 1/2),
//!   h(p) = horo_b(a)·boost02(ln τ), little group horo_z(·).

use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};
use crate::group::{
    boost01, boost02, horo_b, horo_z, minkowski, rotation, wrap_angle, GroupElement, Vec3,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoElement {
    pub a: Vec3,
    pub r: GroupElement,
}

impl IsoElement {
    pub fn new(a: Vec3, r: GroupElement) -> Self {
        IsoElement { a, r }
    }

    pub fn translation(a: Vec3) -> Self {
        IsoElement { a, r: GroupElement::identity() }
    }

    pub fn lorentz(r: GroupElement) -> Self {
        IsoElement { a: Vec3::zeros(), r }
    }

    pub fn inverse(&self) -> Self {
        let ri = self.r.inverse();
        IsoElement { a: -ri.act(&self.a), r: ri }
    }
}

/// (a₁, r₁)·(a₂, r₂) = (a₁ + r₁a₂, r₁r₂)
pub fn iso_multiply(g1: &IsoElement, g2: &IsoElement) -> IsoElement {
    IsoElement { a: g1.a + g1.r.act(&g2.a), r: g1.r * g2.r }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    pub p: Vec3,
    pub msq: f64,
}

impl Momentum {
    pub fn new(p: Vec3) -> Self {
        Momentum { p, msq: minkowski(&p, &p) }
    }
}

/// e^{i(p·a)} with the Minkowski product.
pub fn character(p: &Momentum, a: &Vec3) -> Complex {
    Complex::new(0.0, minkowski(&p.p, a)).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitClass {
    MassiveUpper,
    MassiveLower,
    Tachyonic,
    LightlikeUpper,
    Origin,
}

/// Scale-aware default: 1e-9 (1 + |p|²).
pub fn default_tol(p: &Vec3) -> f64 {
    1e-9 * (1.0 + p.norm_squared())
}

pub fn orbit_classify(p: &Vec3, tol: f64) -> Result<OrbitClass> {
    if !p.iter().all(|x| x.is_finite()) {
        return Err(Error::Domain("momentum has non-finite components".into()));
    }
    if p.norm() < tol {
        return Ok(OrbitClass::Origin);
    }
    let msq = minkowski(p, p);
    if msq.abs() < tol {
        return if p[0] > 0.0 {
            Ok(OrbitClass::LightlikeUpper)
        } else {
            Err(Error::AmbiguousClass(format!("null momentum {p:?} on the lower cone")))
        };
    }
    Ok(if msq < 0.0 {
        OrbitClass::Tachyonic
    } else if p[0] > 0.0 {
        OrbitClass::MassiveUpper
    } else {
        OrbitClass::MassiveLower
    })
}

/// Coordinate chart of one orbit, with the orbit's scale fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitChart {
    /// coordinates (α ≥ 0, φ)
    Massive { mass: f64 },
    /// coordinates (α, β)
    Tachyonic { scale: f64 },
    /// coordinates (τ > 0, a)
    Lightlike,
}

impl OrbitChart {
    pub fn for_momentum(p: &Momentum) -> Result<OrbitChart> {
        match orbit_classify(&p.p, default_tol(&p.p))? {
            OrbitClass::MassiveUpper => Ok(OrbitChart::Massive { mass: p.msq.sqrt() }),
            OrbitClass::Tachyonic => Ok(OrbitChart::Tachyonic { scale: (-p.msq).sqrt() }),
            OrbitClass::LightlikeUpper => Ok(OrbitChart::Lightlike),
            OrbitClass::MassiveLower => {
                Err(Error::OutOfOrbit("lower mass sheet is not reached by SO0(2,1) charts".into()))
            }
            OrbitClass::Origin => Err(Error::OutOfOrbit("zero momentum has no Wigner operator".into())),
        }
    }

    pub fn class(&self) -> OrbitClass {
        match self {
            OrbitChart::Massive { .. } => OrbitClass::MassiveUpper,
            OrbitChart::Tachyonic { .. } => OrbitClass::Tachyonic,
            OrbitChart::Lightlike => OrbitClass::LightlikeUpper,
        }
    }

    pub fn base_point(&self) -> Vec3 {
        match *self {
            OrbitChart::Massive { mass } => Vec3::new(mass, 0.0, 0.0),
            OrbitChart::Tachyonic { scale } => Vec3::new(0.0, 0.0, scale),
            OrbitChart::Lightlike => Vec3::new(0.5, 0.0, 0.5),
        }
    }

    pub fn chart(&self, coords: (f64, f64)) -> Result<Vec3> {
        let (x, y) = coords;
        match *self {
            OrbitChart::Massive { mass } => {
                let (sh, ch) = (x.sinh(), x.cosh());
                Ok(mass * Vec3::new(ch, sh * y.sin(), sh * y.cos()))
            }
            OrbitChart::Tachyonic { scale } => {
                let (sh, ch) = (x.sinh(), x.cosh());
                Ok(scale * Vec3::new(sh * y.cosh(), sh * y.sinh(), ch))
            }
            OrbitChart::Lightlike => {
                if !(x > 0.0) {
                    return Err(Error::OutOfChart(format!("tau = {x} must be positive")));
                }
                Ok(x * Vec3::new((1.0 + y * y) / 2.0, y, (1.0 - y * y) / 2.0))
            }
        }
    }

    pub fn chart_inverse(&self, p: &Vec3) -> Result<(f64, f64)> {
        match *self {
            OrbitChart::Massive { mass } => {
                if !(p[0] > 0.0) {
                    return Err(Error::OutOfChart("massive chart needs p0 > 0".into()));
                }
                let sh = p[1].hypot(p[2]) / mass;
                let phi = if sh == 0.0 { 0.0 } else { wrap_angle(p[1].atan2(p[2])) };
                Ok((sh.asinh(), phi))
            }
            OrbitChart::Tachyonic { scale } => {
                if p[2] < scale * (1.0 - 1e-12) {
                    return Err(Error::OutOfChart(format!(
                        "hyperbolic chart covers p2 >= {scale}, got p2 = {}",
                        p[2]
                    )));
                }
                let d = ((p[0] - p[1]) * (p[0] + p[1])).max(0.0);
                let sh = p[0].signum() * d.sqrt() / scale;
                let beta = if p[0] == 0.0 { 0.0 } else { (p[1] / p[0]).clamp(-1.0, 1.0).atanh() };
                if !beta.is_finite() {
                    return Err(Error::OutOfChart("rapidity is unbounded on this point".into()));
                }
                Ok((sh.asinh(), beta))
            }
            OrbitChart::Lightlike => {
                // Near the excluded ray p ∝ (1, 0, −1) the sum p₀ + p₂ cancels;
                // on the cone it equals p₁²/(p₀ − p₂).
                let tau = if p[2] < 0.0 { p[1] * p[1] / (p[0] - p[2]) } else { p[0] + p[2] };
                if !(tau > 0.0) || !tau.is_finite() {
                    return Err(Error::OutOfChart("stereographic chart needs p0 + p2 > 0".into()));
                }
                Ok((tau, p[1] / tau))
            }
        }
    }

    /// Standard element carrying the base point to chart(coords).
    pub fn transport(&self, coords: (f64, f64)) -> GroupElement {
        let (x, y) = coords;
        match self {
            OrbitChart::Massive { .. } => rotation(y) * boost02(x),
            OrbitChart::Tachyonic { .. } => boost01(y) * boost02(x),
            OrbitChart::Lightlike => horo_b(y) * boost02(x.ln()),
        }
    }

    /// Identify w as a little-group element at its parameter.
    pub fn little_group(&self, w: &GroupElement) -> LittleGroupElement {
        let m = w.matrix();
        match self {
            OrbitChart::Massive { .. } => {
                let phi = wrap_angle(m[(1, 2)].atan2(m[(1, 1)]));
                LittleGroupElement { kind: LittleKind::Rotation(phi), g: *w }
            }
            OrbitChart::Tachyonic { .. } => {
                LittleGroupElement { kind: LittleKind::Boost01(m[(1, 0)].asinh()), g: *w }
            }
            OrbitChart::Lightlike => LittleGroupElement { kind: LittleKind::HoroZ(m[(1, 0)]), g: *w },
        }
    }
}

/// Wigner operator h(p): act(h(p), base point) = p.
pub fn wigner_operator(p: &Momentum) -> Result<GroupElement> {
    let chart = OrbitChart::for_momentum(p)?;
    Ok(chart.transport(chart.chart_inverse(&p.p)?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LittleKind {
    Rotation(f64),
    Boost01(f64),
    HoroZ(f64),
}

impl LittleKind {
    pub fn parameter(&self) -> f64 {
        match *self {
            LittleKind::Rotation(x) | LittleKind::Boost01(x) | LittleKind::HoroZ(x) => x,
        }
    }

    pub fn matrix(&self) -> GroupElement {
        match *self {
            LittleKind::Rotation(x) => rotation(x),
            LittleKind::Boost01(x) => boost01(x),
            LittleKind::HoroZ(x) => horo_z(x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LittleGroupElement {
    pub kind: LittleKind,
    pub g: GroupElement,
}

// Loose enough for products of boosts with rapidities of a few units.
const STABILIZER_TOL: f64 = 1e-9;

/// w(p, r) = h⁻¹(p) · r · h(r⁻¹p), an element of the little group of the base point.
pub fn wigner_rotation(p: &Momentum, r: &GroupElement) -> Result<LittleGroupElement> {
    let chart = OrbitChart::for_momentum(p)?;
    let q = r.inverse().act(&p.p);
    let q_class = orbit_classify(&q, default_tol(&q))?;
    if q_class != chart.class() {
        return Err(Error::OutOfOrbit(format!("r^-1 p lands in {q_class:?}")));
    }
    let h_p = chart.transport(chart.chart_inverse(&p.p)?);
    let h_q = chart.transport(chart.chart_inverse(&q)?);
    let w = h_p.inverse() * *r * h_q;

    let base = chart.base_point();
    // Rounding in the product grows with the factors, not with w itself.
    let scale = h_p.matrix().amax() * r.matrix().amax() * h_q.matrix().amax() * base.amax();
    let drift = (w.act(&base) - base).amax() / scale;
    if drift > STABILIZER_TOL {
        return Err(Error::StabilizerMismatch(drift));
    }
    let little = chart.little_group(&w);
    let dev = little.kind.matrix().distance(&w) * base.amax() / scale;
    if dev > STABILIZER_TOL {
        return Err(Error::StabilizerMismatch(dev));
    }
    Ok(little)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IsoIrrepLabel {
    /// massive orbit, integer spin
    MassSpin { m: f64, s: i64 },
    /// one-sheeted orbit with scale m, real spin
    TachyonicSpin { m: f64, s: f64 },
    /// upper light cone, real helicity
    Helicity { lambda: f64 },
    /// zero momentum, carried by an SO₀(2,1) representation
    BoundaryRep { sigma: Complex },
}

fn label_matches(label: &IsoIrrepLabel, chart: &OrbitChart) -> bool {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-8 * (1.0 + b.abs());
    match (label, chart) {
        (IsoIrrepLabel::MassSpin { m, .. }, OrbitChart::Massive { mass }) => close(*m, *mass),
        (IsoIrrepLabel::TachyonicSpin { m, .. }, OrbitChart::Tachyonic { scale }) => close(m.abs(), *scale),
        (IsoIrrepLabel::Helicity { .. }, OrbitChart::Lightlike) => true,
        _ => false,
    }
}

/// Multiplier and new momentum of (U(a, r)f)(p) = e^{−i(p·a)} Δ(w(p, r)) f(r⁻¹p).
pub fn induced_action(label: &IsoIrrepLabel, g: &IsoElement, p: &Momentum) -> Result<(Complex, Momentum)> {
    if let IsoIrrepLabel::BoundaryRep { .. } = label {
        let class = orbit_classify(&p.p, default_tol(&p.p))?;
        return Err(if class == OrbitClass::Origin {
            Error::UnsupportedCase("zero-momentum representations act through SO0(2,1) matrix elements".into())
        } else {
            Error::LabelOrbitMismatch(format!("boundary label on a {class:?} momentum"))
        });
    }
    let chart = match OrbitChart::for_momentum(p) {
        Ok(c) => c,
        Err(Error::OutOfOrbit(msg)) => return Err(Error::LabelOrbitMismatch(msg)),
        Err(e) => return Err(e),
    };
    if !label_matches(label, &chart) {
        return Err(Error::LabelOrbitMismatch(format!("{label:?} on a {:?} momentum", chart.class())));
    }
    let w = wigner_rotation(p, &g.r)?;
    let angle = match (label, w.kind) {
        (IsoIrrepLabel::MassSpin { s, .. }, LittleKind::Rotation(phi)) => *s as f64 * phi,
        (IsoIrrepLabel::TachyonicSpin { s, .. }, LittleKind::Boost01(theta)) => s * theta,
        (IsoIrrepLabel::Helicity { lambda }, LittleKind::HoroZ(zeta)) => lambda * zeta,
        _ => unreachable!("label and chart were matched above"),
    };
    let mult = Complex::new(0.0, angle - minkowski(&p.p, &g.a)).exp();
    Ok((mult, Momentum::new(g.r.inverse().act(&p.p))))
}

/// Density of the quasi-invariant orbit measure in chart coordinates:
/// ½ tanh α (massive), ½ sinh α (tachyonic), τ(1 − a)² (lightlike), as magnitudes.
pub fn measure_density(class: OrbitClass, coords: (f64, f64)) -> Result<f64> {
    let (x, y) = coords;
    match class {
        OrbitClass::MassiveUpper => Ok(0.5 * x.tanh().abs()),
        OrbitClass::Tachyonic => Ok(0.5 * x.sinh().abs()),
        OrbitClass::LightlikeUpper => {
            if !(x > 0.0) {
                return Err(Error::OutOfChart(format!("tau = {x} must be positive")));
            }
            Ok(x * (1.0 - y) * (1.0 - y))
        }
        OrbitClass::MassiveLower | OrbitClass::Origin => {
            Err(Error::UnsupportedCase(format!("no orbit measure chart for {class:?}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Vec3, b: &Vec3, tol: f64) -> bool {
        (a - b).amax() <= tol
    }

    #[test]
    fn multiplication_examples() {
        let a1 = Vec3::new(1.0, 2.0, -0.5);
        let a2 = Vec3::new(-0.3, 0.1, 4.0);
        let t = iso_multiply(&IsoElement::translation(a1), &IsoElement::translation(a2));
        assert!(close(&t.a, &(a1 + a2), 1e-15));
        let r = rotation(0.4) * boost02(0.9);
        let conj = iso_multiply(
            &iso_multiply(&IsoElement::lorentz(r), &IsoElement::translation(a1)),
            &IsoElement::lorentz(r.inverse()),
        );
        assert!(close(&conj.a, &r.act(&a1), 1e-13));
        assert!(conj.r.distance(&GroupElement::identity()) < 1e-13);
    }

    #[test]
    fn character_examples() {
        let p = Momentum::new(Vec3::new(2.0, 0.3, -1.0));
        assert_eq!(character(&p, &Vec3::zeros()), Complex::new(1.0, 0.0));
        let (a1, a2) = (Vec3::new(0.1, 0.2, 0.3), Vec3::new(-1.0, 0.5, 2.0));
        assert!((character(&p, &a1) * character(&p, &a2) - character(&p, &(a1 + a2))).norm() < 1e-14);
        let r = boost01(0.6) * rotation(1.2);
        let lhs = character(&p, &r.act(&a1));
        let rhs = character(&Momentum::new(r.inverse().act(&p.p)), &a1);
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn classification_examples() {
        let c = |x: f64, y: f64, z: f64| {
            let p = Vec3::new(x, y, z);
            orbit_classify(&p, default_tol(&p))
        };
        assert_eq!(c(2.0, 0.0, 0.0).unwrap(), OrbitClass::MassiveUpper);
        assert_eq!(c(-2.0, 0.0, 0.0).unwrap(), OrbitClass::MassiveLower);
        assert_eq!(c(0.0, 0.0, 1.5).unwrap(), OrbitClass::Tachyonic);
        assert_eq!(c(0.5, 0.0, 0.5).unwrap(), OrbitClass::LightlikeUpper);
        assert_eq!(c(0.0, 0.0, 0.0).unwrap(), OrbitClass::Origin);
        assert!(matches!(c(-0.5, 0.0, 0.5), Err(Error::AmbiguousClass(_))));
    }

    #[test]
    fn wigner_operator_examples() {
        let m = 1.7;
        let h = wigner_operator(&Momentum::new(Vec3::new(m, 0.0, 0.0))).unwrap();
        assert!(h.distance(&GroupElement::identity()) < 1e-15);
        let p = m * Vec3::new(1f64.cosh(), 1f64.sinh() * 0.7f64.sin(), 1f64.sinh() * 0.7f64.cos());
        let h = wigner_operator(&Momentum::new(p)).unwrap();
        assert!(h.distance(&(rotation(0.7) * boost02(1.0))) < 1e-12);
        assert!(close(&h.act(&Vec3::new(m, 0.0, 0.0)), &p, 1e-12));
        let p = Vec3::new(2.5, 2.0, -1.5);
        let h = wigner_operator(&Momentum::new(p)).unwrap();
        assert!(h.distance(&(horo_b(2.0) * boost02(0.0))) < 1e-12);
        assert!(close(&h.act(&Vec3::new(0.5, 0.0, 0.5)), &p, 1e-12));
        assert!(matches!(wigner_operator(&Momentum::new(Vec3::zeros())), Err(Error::OutOfOrbit(_))));
    }

    #[test]
    fn tachyonic_chart_domain() {
        let chart = OrbitChart::Tachyonic { scale: 1.0 };
        assert!(matches!(chart.chart_inverse(&Vec3::new(0.0, 0.0, -1.0)), Err(Error::OutOfChart(_))));
        let p = chart.chart((-0.8, 0.3)).unwrap();
        let (a, b) = chart.chart_inverse(&p).unwrap();
        assert!((a + 0.8).abs() < 1e-12 && (b - 0.3).abs() < 1e-12);
    }

    #[test]
    fn wigner_rotation_trivial_cases() {
        let p = Momentum::new(Vec3::new(3.0, 1.0, 0.5));
        let w = wigner_rotation(&p, &GroupElement::identity()).unwrap();
        assert!(w.kind.parameter().abs() < 1e-12 || (w.kind.parameter() - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        let base = Momentum::new(Vec3::new(0.0, 0.0, 2.0));
        let w = wigner_rotation(&base, &boost01(0.45)).unwrap();
        assert!(matches!(w.kind, LittleKind::Boost01(t) if (t - 0.45).abs() < 1e-13));
        let base = Momentum::new(Vec3::new(0.5, 0.0, 0.5));
        let w = wigner_rotation(&base, &horo_z(-1.2)).unwrap();
        assert!(matches!(w.kind, LittleKind::HoroZ(z) if (z + 1.2).abs() < 1e-13));
    }

    #[test]
    fn induced_action_examples() {
        let m = 2.0;
        let p = Momentum::new(Vec3::new(m, 0.0, 0.0));
        let label = IsoIrrepLabel::MassSpin { m, s: 3 };
        let (mult, q) = induced_action(&label, &IsoElement::lorentz(rotation(0.4)), &p).unwrap();
        assert!((mult - Complex::new(0.0, 1.2).exp()).norm() < 1e-13);
        assert!(close(&q.p, &p.p, 1e-14));
        let a = Vec3::new(0.3, -1.0, 2.0);
        let (mult, q) = induced_action(&label, &IsoElement::translation(a), &p).unwrap();
        assert!((mult - Complex::new(0.0, -minkowski(&p.p, &a)).exp()).norm() < 1e-14);
        assert!(close(&q.p, &p.p, 0.0));
        let wrong = IsoIrrepLabel::Helicity { lambda: 1.0 };
        assert!(matches!(induced_action(&wrong, &IsoElement::translation(a), &p), Err(Error::LabelOrbitMismatch(_))));
        let zero = Momentum::new(Vec3::zeros());
        let b = IsoIrrepLabel::BoundaryRep { sigma: Complex::new(-0.5, 1.0) };
        assert!(matches!(induced_action(&b, &IsoElement::translation(a), &zero), Err(Error::UnsupportedCase(_))));
    }

    #[test]
    fn measure_examples() {
        assert_eq!(measure_density(OrbitClass::MassiveUpper, (0.0, 1.0)).unwrap(), 0.0);
        assert!((measure_density(OrbitClass::Tachyonic, (1.0, 0.0)).unwrap() - 0.5 * 1f64.sinh()).abs() < 1e-15);
        assert_eq!(measure_density(OrbitClass::LightlikeUpper, (1.0, 0.0)).unwrap(), 1.0);
        assert!(matches!(measure_density(OrbitClass::Origin, (0.0, 0.0)), Err(Error::UnsupportedCase(_))));
    }
}
