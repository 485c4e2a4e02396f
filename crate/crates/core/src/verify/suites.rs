use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::{int, rat, CirclePoint, Rational, Scalar};
use crate::families::{orthogonality_check, recurrence_eval, Params};
use crate::genfun::{acp_ode_residual, f1_transform_check, gf_coefficient_check, GfId, GfSpec};
use crate::hyperexplicit::{
    amp_quadratic_form, explicit_eval, finite_sum_identity, mpollaczek_explicit, ternary_transform_check, SideValue, Variant,
    DEFAULT_EPS,
};

use super::grid::Grid;
use super::identities::{
    akp_amp, convolution_acp, convolution_alp, convolution_amp, euler_transform, kummer_transform, leading_coefficients,
    meixner_shift, mpollaczek_amp, reflection,
};
use super::numeric::{integral_check, limit_check, IntegralKind, LimitKind, LimitSchedule};
use super::{Case, Job, NamedParams, Suite};

const EXPLICIT_POINTS: usize = 25;
const EXPLICIT_NMAX: usize = 12;
const GF_POINTS: usize = 15;
const POLY_POINTS: usize = 15;
const POLY_NMAX: usize = 10;
const TRANSFORM_DRAWS: usize = 20;
const FINITE_SUM_DRAWS: usize = 20;
const ODE_POINTS: usize = 10;
const INTEGRAL_POINTS: usize = 5;
const QUAD_ORDER: usize = 64;
const QUADRATIC_POINTS: usize = 10;
const STRUCTURE_NMAX: usize = 20;
const LIMIT_TOLERANCE: f64 = 1e-4;
const QUADRATIC_TOLERANCE: f64 = 1e-10;

fn named(params: &Params, x: &Rational) -> NamedParams {
    let mut v: NamedParams = params.named().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    v.push(("family".into(), params.kind().id().into()));
    v.push(("x".into(), x.render()));
    v
}

fn kv(pairs: &[(&str, &Rational)]) -> NamedParams {
    pairs.iter().map(|(k, v)| (k.to_string(), v.render())).collect()
}

fn not_integer(q: &Rational) -> bool {
    !q.is_integer()
}

fn amp_point(g: &mut Grid) -> Params {
    g.sample(|g| {
        let c = g.positive();
        let p = Params::amp(g.rational(), c, g.nonnegative());
        p.validate().ok().map(|_| p)
    })
}

fn acp_point(g: &mut Grid) -> Params {
    Params::acp(g.positive(), g.nonnegative())
}

fn alp_point(g: &mut Grid) -> Params {
    g.sample(|g| {
        let alpha = g.rational();
        if alpha.is_integer() && !alpha.is_positive() {
            return None;
        }
        let p = Params::alp(alpha, g.nonnegative());
        p.validate().ok().map(|_| p)
    })
}

/// AKP parameters with `N - gamma` not an integer.
fn akp_point(g: &mut Grid) -> Params {
    g.sample(|g| {
        let gamma = g.nonnegative();
        let p = g.rational();
        let shift = g.rational();
        if p.is_zero() || p.is_one() || shift.is_integer() {
            return None;
        }
        let params = Params::akp(p, &gamma + shift, gamma);
        params.validate().ok().map(|_| params)
    })
}

/// AKP case `0 < p < 1` with `N - gamma = m`.
fn akp_boundary_point(g: &mut Grid, m: usize) -> Params {
    let p = g.sample(|g| {
        let p = g.ratio(1..=39, 2..=40);
        (p < Rational::one()).then_some(p)
    });
    let gamma = g.nonnegative();
    Params::akp(p, &gamma + int(m as i64), gamma)
}

fn mp_point(g: &mut Grid) -> Params {
    g.sample(|g| {
        let s = g.rational();
        if s.is_zero() {
            return None;
        }
        let p = Params::mpollaczek(g.rational(), &CirclePoint::new(s), g.nonnegative());
        p.validate().ok().map(|_| p)
    })
}

pub(super) fn jobs(suite: Suite, seed: u64, order: usize) -> Vec<Job> {
    match suite {
        Suite::ExplicitVsRecurrence => explicit_jobs(seed, order),
        Suite::GeneratingFunctions => gf_jobs(seed, order),
        Suite::Convolution => convolution_jobs(seed, order),
        Suite::Connections => connection_jobs(seed, order),
        Suite::Transformations => transformation_jobs(seed, order),
        Suite::FiniteSum => finite_sum_jobs(seed),
        Suite::Ode => ode_jobs(seed, order),
        Suite::Integral => integral_jobs(seed),
        Suite::Limits => limit_jobs(seed),
        Suite::QuadraticForm => quadratic_jobs(seed),
        Suite::Structure => structure_jobs(seed, order),
        Suite::SelfTest => self_test_jobs(),
        Suite::All => Vec::new(),
    }
}

fn explicit_case(identity: String, params: Params, variant: Variant, x: Rational, nmax: usize, ns: Vec<usize>) -> Job {
    Box::new(move || {
        let names = named(&params, &x);
        let oracle = match recurrence_eval(&params, &x, nmax) {
            Ok(v) => v,
            Err(e) => return vec![Case::error(&identity, &names, 0, &e)],
        };
        let mut last = None;
        for &n in &ns {
            match explicit_eval(&params, variant, &x, n) {
                Ok(v) if v == oracle[n] => last = Some((n, v)),
                Ok(v) => return vec![Case::exact(&identity, &names, n, &v, &oracle[n])],
                Err(e) => return vec![Case::error(&identity, &names, n, &e)],
            }
        }
        let (n, v) = last.unwrap_or((0, Rational::one()));
        vec![Case::exact(&identity, &names, n, &v, &oracle[n])]
    })
}

fn explicit_jobs(seed: u64, order: usize) -> Vec<Job> {
    let nmax = order.min(EXPLICIT_NMAX);
    let all: Vec<usize> = (0..=nmax).collect();
    let mut jobs: Vec<Job> = Vec::new();
    type Sampler = fn(&mut Grid) -> Params;
    let families: [(&str, Sampler, [Variant; 2]); 4] = [
        ("amp", amp_point, [Variant::AmpA, Variant::AmpB]),
        ("acp", acp_point, [Variant::AcpA, Variant::AcpB]),
        ("alp", alp_point, [Variant::AlpA, Variant::AlpB]),
        ("akp", akp_point, [Variant::AkpA, Variant::AkpB]),
    ];
    for (name, sampler, variants) in families {
        let mut g = Grid::new(seed, &format!("explicit-{name}"));
        for _ in 0..EXPLICIT_POINTS {
            let params = sampler(&mut g);
            let x = g.rational();
            for v in variants {
                jobs.push(explicit_case(format!("explicit-{}", v.id()), params.clone(), v, x.clone(), nmax, all.clone()));
            }
        }
    }

    let mut g = Grid::new(seed, "explicit-classical");
    for _ in 0..POLY_POINTS {
        let x = g.rational();
        let c = g.sample(|g| Some(g.positive()).filter(|c| !c.is_one()));
        let p = g.sample(|g| Some(g.ratio(1..=39, 2..=40)).filter(|p| p < &Rational::one()));
        let classical = [
            (Params::amp(g.positive(), c, int(0)), Variant::Meixner),
            (Params::acp(g.positive(), int(0)), Variant::Charlier),
            (g.sample(|g| Some(alp_point(g).with_gamma(int(0))).filter(|p| p.validate().is_ok())), Variant::Laguerre),
            (Params::akp(p, int(g.small_int(nmax as i64..=2 * nmax as i64)), int(0)), Variant::Krawtchouk),
        ];
        for (params, v) in classical {
            jobs.push(explicit_case(format!("explicit-{}", v.id()), params, v, x.clone(), nmax, all.clone()));
        }
    }

    let mut g = Grid::new(seed, "explicit-akp-boundary");
    for _ in 0..POLY_POINTS {
        let m = g.small_int(0..=nmax as i64) as usize;
        let params = akp_boundary_point(&mut g, m);
        let x = g.rational();
        jobs.push(explicit_case("explicit-akp-boundary".into(), params, Variant::AkpBoundary, x, m, vec![m]));
    }

    let mut g = Grid::new(seed, "explicit-mp");
    let mp_nmax = nmax.min(8);
    for _ in 0..POLY_POINTS {
        let params = mp_point(&mut g);
        let x = g.rational();
        jobs.push(Box::new(move || {
            let names = named(&params, &x);
            let gx = num_complex::Complex::new(x.clone(), Rational::zero());
            let oracle = crate::families::recurrence_eval_formal(&params.to_gaussian(), &gx, mp_nmax);
            let sides = oracle.and_then(|o| {
                o.into_iter()
                    .enumerate()
                    .map(|(n, r)| Ok((mpollaczek_explicit(&params, &x, n)?, r)))
                    .collect::<crate::error::Result<Vec<_>>>()
            });
            vec![Case::sides("explicit-mp", &names, sides)]
        }));
    }
    jobs
}

fn gf_point(id: GfId, g: &mut Grid, order: usize) -> Params {
    let positive_gamma = |g: &mut Grid| g.positive();
    match id {
        GfId::AmpGf1 | GfId::AmpGf2 => amp_point(g),
        GfId::MeixnerGf | GfId::MeixnerGf2 => {
            g.sample(|g| Some(amp_point(g).with_gamma(int(0))).filter(|p| p.validate().is_ok()))
        }
        GfId::MeixnerWeighted => g.sample(|g| {
            let p = amp_point(g).with_gamma(positive_gamma(g));
            p.with_gamma(int(0)).validate().ok().map(|_| p)
        }),
        GfId::AcpGf => acp_point(g),
        GfId::CharlierGf => g.sample(|g| Some(acp_point(g).with_gamma(int(0))).filter(|p| p.validate().is_ok())),
        GfId::CharlierWeighted => acp_point(g).with_gamma(positive_gamma(g)),
        GfId::AlpGf => alp_point(g),
        GfId::LaguerreGf => g.sample(|g| Some(alp_point(g).with_gamma(int(0))).filter(|p| p.validate().is_ok())),
        GfId::LaguerreWeighted => g.sample(|g| {
            let p = alp_point(g).with_gamma(positive_gamma(g));
            p.with_gamma(int(0)).validate().ok().map(|_| p)
        }),
        GfId::AkpGf => akp_point(g),
        GfId::AkpGfPartial => {
            let m = g.small_int(0..=order as i64) as usize;
            akp_boundary_point(g, m)
        }
        GfId::KrawtchoukGf => {
            let m = g.small_int(0..=order as i64);
            let p = akp_boundary_point(g, 0);
            let crate::families::FamilyParams::Akp { p, .. } = p else { unreachable!() };
            Params::akp(p, int(m), int(0))
        }
    }
}

fn gf_jobs(seed: u64, order: usize) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for id in GfId::ALL {
        let mut g = Grid::new(seed, &format!("gf-{}", id.id()));
        for _ in 0..GF_POINTS {
            let params = gf_point(id, &mut g, order);
            let x = g.rational();
            jobs.push(Box::new(move || {
                let names = named(&params, &x);
                let identity = format!("gf-{}", id.id().to_ascii_lowercase());
                match gf_coefficient_check(&GfSpec::new(id, params.clone(), x.clone(), order)) {
                    Ok(check) => match &check.mismatch {
                        Some(m) => vec![Case::exact(&identity, &names, m.n, &m.lhs, &m.rhs)],
                        None => vec![Case::exact(&identity, &names, order, &check.lhs.coeff(order), &check.rhs.coeff(order))],
                    },
                    Err(e) => vec![Case::error(&identity, &names, 0, &e)],
                }
            }));
        }
    }
    jobs
}

fn convolution_jobs(seed: u64, order: usize) -> Vec<Job> {
    let nmax = order.min(POLY_NMAX);
    let mut jobs: Vec<Job> = Vec::new();
    let mut g = Grid::new(seed, "convolution");
    for _ in 0..POLY_POINTS {
        let amp = amp_point(&mut g);
        let acp = acp_point(&mut g);
        let alp = alp_point(&mut g);
        let x = g.rational();
        jobs.push(Box::new(move || {
            let mut out = Vec::new();
            if let Params::Amp { beta, c, gamma } = &amp {
                out.push(Case::sides("convolution-amp", &named(&amp, &x), convolution_amp(beta, c, gamma, &x, nmax)));
            }
            if let Params::Acp { a, gamma } = &acp {
                out.push(Case::sides("convolution-acp", &named(&acp, &x), convolution_acp(a, gamma, &x, nmax)));
            }
            if let Params::Alp { alpha, gamma } = &alp {
                out.push(Case::sides("convolution-alp", &named(&alp, &x), convolution_alp(alpha, gamma, &x, nmax)));
            }
            out
        }));
    }
    jobs
}

fn connection_jobs(seed: u64, order: usize) -> Vec<Job> {
    let nmax = order.min(POLY_NMAX);
    let mut jobs: Vec<Job> = Vec::new();
    let mut g = Grid::new(seed, "connections");
    for _ in 0..POLY_POINTS {
        let amp = amp_point(&mut g);
        let akp = akp_point(&mut g);
        let mp = mp_point(&mut g);
        let (beta_shift, c_shift) = g.sample(|g| {
            let beta = g.rational();
            let c = g.positive();
            (beta <= Rational::one() && !c.is_one()).then_some((beta, c))
        });
        let x = g.rational();
        jobs.push(Box::new(move || {
            let mut out = Vec::new();
            if let Params::Amp { beta, c, gamma } = &amp {
                out.push(Case::sides("connection-reflection", &named(&amp, &x), reflection(beta, c, gamma, &x, nmax)));
            }
            if let Params::Akp { p, n, gamma } = &akp {
                out.push(Case::sides("connection-akp-amp", &named(&akp, &x), akp_amp(p, n, gamma, &x, nmax)));
            }
            let names = kv(&[("beta", &beta_shift), ("c", &c_shift), ("x", &x)]);
            out.push(Case::sides("connection-meixner-shift", &names, meixner_shift(&beta_shift, &c_shift, &x, nmax)));
            if let Params::MPollaczek { nu, cos, sin, gamma } = &mp {
                let phi = CirclePoint { s: Rational::zero(), cos: cos.clone(), sin: sin.clone() };
                let sides = mpollaczek_amp(nu, &phi, gamma, &x, nmax);
                let real = sides.as_ref().map(|v| v.iter().all(|(l, r)| l.im.is_zero() && r.im.is_zero())).unwrap_or(true);
                let mut case = Case::sides("connection-mp-amp", &named(&mp, &x), sides);
                if !real {
                    case.status = super::Status::Fail;
                }
                out.push(case);
            }
            out
        }));
    }
    jobs
}

/// `true` when no parameter in `den` is `-j` for `j < len`.
fn ladder_safe(den: &[&Rational], len: usize) -> bool {
    den.iter().all(|d| d.nonpositive_integer().is_none_or(|m| m as usize >= len))
}

fn transformation_jobs(seed: u64, order: usize) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let mut g = Grid::new(seed, "transformations");
    for _ in 0..TRANSFORM_DRAWS {
        let (a, b) = (g.rational(), g.rational());
        let c = g.sample(|g| Some(g.rational()).filter(|c| ladder_safe(&[c], order + 1)));
        let (ka, kb) = (g.rational(), g.sample(|g| Some(g.rational()).filter(|b| ladder_safe(&[b], order + 1))));
        let m = g.small_int(0..=8) as usize;
        let (ta, tb, tc, td) = g.sample(|g| {
            let (a, b, c, d) = (g.rational(), g.rational(), g.rational(), g.rational());
            let shifted = &a - &c + int(1) - int(m as i64);
            ladder_safe(&[&c, &d, &shifted], m).then_some((a, b, c, d))
        });
        let (fa, fb1, fb2, fx, fy) = (g.rational(), g.rational(), g.rational(), g.rational(), g.rational());
        let fs = g.sample(|g| Some(g.rational()).filter(|s| ladder_safe(&[s], order + 1)));
        jobs.push(Box::new(move || {
            let mut out = Vec::new();
            let series_case = |id: &str, names: NamedParams, r: crate::error::Result<(crate::Series, crate::Series)>| match r {
                Ok((l, rr)) => {
                    let n = (0..=order).find(|&k| l.coeff(k) != rr.coeff(k)).unwrap_or(order);
                    Case::exact(id, &names, n, &l.coeff(n), &rr.coeff(n))
                }
                Err(e) => Case::error(id, &names, 0, &e),
            };
            out.push(series_case("transform-euler", kv(&[("a", &a), ("b", &b), ("c", &c)]), euler_transform(&a, &b, &c, order)));
            out.push(series_case("transform-kummer", kv(&[("a", &ka), ("b", &kb)]), kummer_transform(&ka, &kb, order)));
            let names = kv(&[("a", &ta), ("b", &tb), ("c", &tc), ("d", &td)]);
            out.push(match ternary_transform_check(m, &ta, &tb, &tc, &td) {
                Ok((l, r)) => Case::exact("transform-3f2", &names, m, &l, &r),
                Err(e) => Case::error("transform-3f2", &names, m, &e),
            });
            let names = kv(&[("alpha", &fa), ("beta1", &fb1), ("beta2", &fb2), ("sigma", &fs), ("x", &fx), ("y", &fy)]);
            out.push(series_case("transform-f1", names, f1_transform_check(&fa, &fb1, &fb2, &fs, &fx, &fy, order)));
            out
        }));
    }
    jobs
}

fn finite_sum_case(identity: &'static str, a: Rational, b: Rational, y: Rational, t: Rational, n: usize) -> Job {
    Box::new(move || {
        let names = kv(&[("a", &a), ("b", &b), ("y", &y), ("t", &t)]);
        match finite_sum_identity(&a, &b, &y, &t, n) {
            Ok(r) => match &r.rhs {
                SideValue::Exact(q) => vec![Case::exact(identity, &names, n, &r.lhs, q)],
                SideValue::Float(v) => {
                    vec![Case::float(identity, &names, n, r.lhs.to_f64().unwrap_or(f64::NAN), *v, r.agrees(1e-12))]
                }
            },
            Err(e) => vec![Case::error(identity, &names, n, &e)],
        }
    })
}

fn finite_sum_jobs(seed: u64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let mut g = Grid::new(seed, "finite-sum");
    for i in 0..FINITE_SUM_DRAWS {
        let n = g.small_int(0..=8) as usize;
        if i % 2 == 0 {
            let (a, b) = g.sample(|g| {
                let (a, b) = (g.positive(), g.rational());
                (b > int(-1) && !b.is_zero() && a != b).then_some((a, b))
            });
            let y = g.sample(|g| Some(g.rational()).filter(|y| (&a + y).nonpositive_integer().is_none()));
            jobs.push(finite_sum_case("finite-sum-3f2", a, b, y, int(0), n));
        } else {
            let a = int(g.small_int(1..=5));
            let y = int(g.small_int(1..=4));
            let b = g.sample(|g| Some(g.rational()).filter(|b| b > &int(-1) && not_integer(b)));
            let t = g.sample(|g| Some(g.rational()).filter(|t| !t.is_zero()));
            jobs.push(finite_sum_case("finite-sum", a, b, y, t, n));
        }
    }
    jobs.push(finite_sum_case("finite-sum-3f2", int(1), int(2), int(1), int(0), 1));
    jobs.push(finite_sum_case("finite-sum-float", rat(1, 2), rat(3, 2), int(1), rat(1, 3), 2));
    jobs
}

fn ode_jobs(seed: u64, order: usize) -> Vec<Job> {
    let mut g = Grid::new(seed, "ode");
    (0..ODE_POINTS)
        .map(|_| {
            let params = acp_point(&mut g);
            let x = g.rational();
            Box::new(move || {
                let names = named(&params, &x);
                let Params::Acp { a, gamma } = &params else { unreachable!() };
                let case = match acp_ode_residual(a, gamma, &x, order) {
                    Ok(res) => {
                        let n = res.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(res.order());
                        Case::exact("ode-acp", &names, n, &res.coeff(n), &Rational::zero())
                    }
                    Err(e) => Case::error("ode-acp", &names, 0, &e),
                };
                vec![case]
            }) as Job
        })
        .collect()
}

fn integral_jobs(seed: u64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let mut g = Grid::new(seed, "integral");
    for i in 0..2 * INTEGRAL_POINTS {
        let gamma = g.sample(|g| Some(g.ratio(1..=12, 1..=4)).filter(|q| q >= &rat(1, 2)));
        let x = g.ratio(-6..=6, 1..=3);
        let t = g.ratio(-5..=5, 12..=12);
        let (kind, params) = if i % 2 == 0 {
            (IntegralKind::AmpGf, Params::amp(g.ratio(1..=8, 1..=4), g.sample(|g| Some(g.ratio(1..=19, 10..=10)).filter(|c| !c.is_one())), gamma))
        } else {
            (IntegralKind::AcpGf, Params::acp(g.ratio(2..=12, 1..=2), gamma))
        };
        jobs.push(Box::new(move || {
            let mut names = named(&params, &x);
            names.push(("t".into(), t.render()));
            let identity = format!("integral-{}", kind.id().replace('_', "-"));
            match integral_check(kind, &params, &x, &t, QUAD_ORDER) {
                Ok(o) => vec![Case::float(&identity, &names, QUAD_ORDER, o.integral, o.series, o.passed)],
                Err(e) => vec![Case::error(&identity, &names, 0, &e)],
            }
        }));
    }
    jobs
}

fn limit_job(schedule: LimitSchedule) -> Job {
    Box::new(move || {
        let names = kv(&[
            (if schedule.kind == LimitKind::CharlierFromMeixner { "a" } else { "alpha" }, &schedule.param),
            ("gamma", &schedule.gamma),
            ("x", &schedule.x),
        ]);
        let identity = format!("limit-{}", schedule.kind.id().replace('_', "-"));
        match limit_check(&schedule, LIMIT_TOLERANCE) {
            Ok(o) => vec![Case::float(&identity, &names, schedule.n, o.final_value, o.target, o.passed)],
            Err(e) => vec![Case::error(&identity, &names, schedule.n, &e)],
        }
    })
}

fn limit_jobs(seed: u64) -> Vec<Job> {
    let mut jobs = vec![
        limit_job(LimitSchedule::doubling(LimitKind::CharlierFromMeixner, int(2), int(1), int(1), 2)),
        limit_job(LimitSchedule::doubling(LimitKind::CharlierFromMeixner, int(2), int(1), int(1), 0)),
        limit_job(LimitSchedule::doubling(LimitKind::LaguerreFromMeixner, rat(1, 2), int(1), rat(3, 2), 3)),
    ];
    let mut g = Grid::new(seed, "limits");
    for kind in [LimitKind::CharlierFromMeixner, LimitKind::LaguerreFromMeixner] {
        for _ in 0..3 {
            let schedule = g.sample(|g| {
                let param = match kind {
                    LimitKind::CharlierFromMeixner => g.ratio(1..=12, 1..=4),
                    LimitKind::LaguerreFromMeixner => g.ratio(-3..=12, 1..=4),
                };
                let s = LimitSchedule::doubling(kind, param, g.ratio(0..=12, 1..=4), g.ratio(-8..=8, 1..=4), g.small_int(1..=4) as usize);
                let target = match kind {
                    LimitKind::CharlierFromMeixner => recurrence_eval(&Params::acp(s.param.clone(), s.gamma.clone()), &s.x, s.n),
                    LimitKind::LaguerreFromMeixner => recurrence_eval(&Params::alp(s.param.clone(), s.gamma.clone()), &s.x, s.n),
                };
                let big_enough = target.ok()?.last()?.abs() >= rat(1, 100);
                big_enough.then_some(s)
            });
            jobs.push(limit_job(schedule));
        }
    }
    jobs
}

fn quadratic_jobs(seed: u64) -> Vec<Job> {
    let mut g = Grid::new(seed, "quadratic-form");
    (0..QUADRATIC_POINTS)
        .map(|_| {
            let (beta, c, gamma, x, n) = g.sample(|g| {
                let beta = g.ratio(-20..=40, 2..=10);
                let c = g.ratio(7..=20, 10..=10);
                let gamma = g.ratio(1..=12, 1..=4);
                let x = g.ratio(-8..=8, 1..=4);
                let n = g.small_int(0..=6) as usize;
                let gb = &gamma + &beta;
                let ok = not_integer(&beta) && c >= rat(2, 3) && !c.is_one() && gb.is_positive() && !gb.is_one();
                let conditioned = || amp_quadratic_form(&beta, &c, &gamma, &x, n, DEFAULT_EPS).is_ok();
                (ok && conditioned()).then_some((beta, c, gamma, x, n))
            });
            Box::new(move || {
                let params = Params::amp(beta.clone(), c.clone(), gamma.clone());
                let names = named(&params, &x);
                let oracle = recurrence_eval(&params, &x, n).map(|v| v[n].to_f64().unwrap_or(f64::NAN));
                let value = amp_quadratic_form(&beta, &c, &gamma, &x, n, DEFAULT_EPS);
                match (value, oracle) {
                    (Ok(v), Ok(o)) => {
                        let ok = (v - o).abs() <= QUADRATIC_TOLERANCE * (1.0 + o.abs());
                        vec![Case::float("quadratic-form", &names, n, v, o, ok)]
                    }
                    (Err(e), _) | (_, Err(e)) => vec![Case::error("quadratic-form", &names, n, &e)],
                }
            }) as Job
        })
        .collect()
}

fn structure_jobs(seed: u64, order: usize) -> Vec<Job> {
    let nmax = order.min(STRUCTURE_NMAX);
    let mut jobs: Vec<Job> = Vec::new();
    let mut g = Grid::new(seed, "structure");
    for _ in 0..5 {
        for params in [amp_point(&mut g), acp_point(&mut g), alp_point(&mut g), akp_point(&mut g), mp_point(&mut g)] {
            jobs.push(Box::new(move || {
                let names = named(&params, &Rational::zero());
                let identity = format!("leading-coefficient-{}", params.kind().id());
                match leading_coefficients(&params, nmax) {
                    Ok(rows) => {
                        let bad = rows.iter().enumerate().find(|(n, (deg, lead, exp))| deg != n || lead != exp);
                        let (n, (_, lead, exp)) = bad.unwrap_or((nmax, &rows[nmax]));
                        let mut case = Case::exact(&identity, &names, n, lead, exp);
                        if bad.is_some() {
                            case.status = super::Status::Fail;
                        }
                        vec![case]
                    }
                    Err(e) => vec![Case::error(&identity, &names, 0, &e)],
                }
            }));
        }
    }

    let mut orth: Vec<(Params, usize)> = vec![(Params::akp(rat(1, 2), int(5), rat(1, 2)), 4)];
    for _ in 0..5 {
        let m = g.small_int(0..=nmax as i64 + 3) as usize;
        let params = akp_boundary_point(&mut g, m);
        let shifted = Params::akp(
            match &params {
                Params::Akp { p, .. } => p.clone(),
                _ => unreachable!(),
            },
            match &params {
                Params::Akp { n, .. } => n + g.ratio(0..=9, 10..=10),
                _ => unreachable!(),
            },
            params.gamma().clone(),
        );
        orth.push((shifted, m.min(nmax)));
        let amp = g.sample(|g| {
            let p = Params::amp(g.positive(), g.ratio(1..=39, 40..=40), g.nonnegative());
            p.validate().ok().map(|_| p)
        });
        orth.push((amp, nmax));
        orth.push((acp_point(&mut g), nmax));
        orth.push((alp_point(&mut g), nmax));
    }
    for (params, expected) in orth {
        jobs.push(Box::new(move || {
            let names = named(&params, &Rational::zero());
            let report = orthogonality_check(&params, nmax);
            let identity = format!("orthogonality-range-{}", params.kind().id());
            vec![Case::exact(&identity, &names, nmax, &int(report.valid_range as i64), &int(expected as i64))]
        }));
    }
    jobs
}

fn self_test_jobs() -> Vec<Job> {
    vec![Box::new(|| {
        let params = Params::amp(int(1), rat(1, 2), int(1));
        let x = int(1);
        let names = named(&params, &x);
        let poisoned = explicit_eval(&params, Variant::AmpB, &x, 2).map(|v| v + int(1));
        match (poisoned, recurrence_eval(&params, &x, 2)) {
            (Ok(v), Ok(o)) => vec![Case::exact("self-test-poisoned", &names, 2, &v, &o[2])],
            (Err(e), _) | (_, Err(e)) => vec![Case::error("self-test-poisoned", &names, 2, &e)],
        }
    })]
}
