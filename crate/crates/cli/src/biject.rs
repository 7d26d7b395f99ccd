//! The `biject` subcommand.

use clap::{Args, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use dinvkit::bijections::{
    catalan_params, ehh_forward, ehh_inverse, eta, eta_inverse, ndinv, phi, pld_recursive_step, pld_recursive_step_via_maps, psi,
    psi_inverse, shuffle_recursion_step, DominoSequence,
};
use dinvkit::lattice::{DecoratedLabelledPath, PolyominoWord};

use super::{Failure, Format, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    /// Catalan partially labelled path to polyomino word.
    EtaInv,
    /// Polyomino word to Catalan partially labelled path.
    Eta,
    /// Polyomino word to two-car parking function with ghost car.
    Psi,
    /// Two-car parking function with ghost car to polyomino word.
    PsiInv,
    /// One block move on a domino sequence or two-car parking function with ghost car.
    Phi,
    /// Shuffle path to decorated two-car parking function (needs --k, --n, --m).
    Ehh,
    /// Decorated two-car parking function back to its shuffle path.
    EhhInv,
    /// Recursive step on a Catalan partially labelled path.
    PldStep,
    /// Recursive step on a shuffle path (needs --k, --n, --m).
    ShuffleStep,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    pub map: MapName,
    /// JSON input, or `@file`; read from standard input when absent. Polyomino words may be
    /// given as a string such as "0 0~ 1".
    pub input: Option<String>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
}

/// Any object a map consumes or produces.
enum Object {
    Path(DecoratedLabelledPath),
    Word(PolyominoWord),
    Dominoes(DominoSequence),
}

impl Object {
    fn to_json(&self) -> Value {
        match self {
            Object::Path(p) => serde_json::to_value(p),
            Object::Word(w) => serde_json::to_value(w).map(|mut v| {
                v["word"] = w.to_string().into();
                v
            }),
            Object::Dominoes(d) => serde_json::to_value(d),
        }
        .unwrap_or_default()
    }

    /// `(dinv, area, composition)`, the composition being the zero composition of a partially
    /// labelled path or the big car composition of a two-car parking function.
    fn stats(&self) -> (Option<u64>, Option<u64>, Option<String>) {
        let path_stats = |p: &DecoratedLabelledPath| {
            let comp = p.zero_composition().or_else(|_| p.big_car_composition()).ok().map(|c| c.to_string());
            (Some(p.dinv()), Some(p.area()), comp)
        };
        match self {
            Object::Path(p) => path_stats(p),
            Object::Word(w) => (Some(w.dinv()), Some(w.area()), None),
            Object::Dominoes(d) if d.is_empty() => (Some(0), Some(0), None),
            Object::Dominoes(d) => match d.to_path() {
                Ok(p) => path_stats(&p),
                Err(_) => (None, None, None),
            },
        }
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("outside the domain: {e}"))
}

fn parse<T: DeserializeOwned>(v: &Value) -> Result<T, Failure> {
    serde_json::from_value(v.clone()).map_err(domain)
}

fn parse_word(v: &Value) -> Result<PolyominoWord, Failure> {
    match v {
        Value::String(s) => PolyominoWord::parse(s).map_err(domain),
        _ => parse(v),
    }
}

/// A domino sequence given as a list of pairs, or a two-car parking function with ghost car.
fn parse_dominoes(v: &Value) -> Result<DominoSequence, Failure> {
    match v {
        Value::Array(_) => parse(v),
        _ => DominoSequence::from_path(&parse(v)?).map_err(domain),
    }
}

fn shuffle_params(a: &BijectArgs) -> Result<(u32, u32, u32), Failure> {
    match (a.k, a.n, a.m) {
        (Some(k), Some(n), Some(m)) => Ok((k, n, m)),
        _ => Err(Failure::Usage(format!("{:?} needs --k, --n and --m", a.map))),
    }
}

/// One checked transport property.
struct Contract {
    name: &'static str,
    holds: bool,
}

fn contract(name: &'static str, holds: bool) -> Contract {
    Contract { name, holds }
}

fn apply(a: &BijectArgs, input: &Value) -> Result<(Object, Object, Vec<Contract>, Value), Failure> {
    let mut extra = Value::Null;
    let (before, after, contracts) = match a.map {
        MapName::EtaInv => {
            let d: DecoratedLabelledPath = parse(input)?;
            let w = eta_inverse(&d).map_err(domain)?;
            let c = vec![contract("area preserved", d.area() == w.area()), contract("round trip", eta(&w).ok().as_ref() == Some(&d))];
            (Object::Path(d), Object::Word(w), c)
        }
        MapName::Eta => {
            let w = parse_word(input)?;
            let d = eta(&w).map_err(domain)?;
            let c = vec![contract("area preserved", w.area() == d.area()), contract("round trip", eta_inverse(&d).ok().as_ref() == Some(&w))];
            (Object::Word(w), Object::Path(d), c)
        }
        MapName::Psi => {
            let w = parse_word(input)?;
            let p = psi(&w).map_err(domain)?;
            let c = vec![
                contract("area preserved", w.area() == p.area()),
                contract("dinv preserved", w.dinv() == p.dinv()),
                contract("round trip", psi_inverse(&p).ok().as_ref() == Some(&w)),
            ];
            (Object::Word(w), Object::Path(p), c)
        }
        MapName::PsiInv => {
            let p: DecoratedLabelledPath = parse(input)?;
            let w = psi_inverse(&p).map_err(domain)?;
            let c = vec![
                contract("area preserved", w.area() == p.area()),
                contract("dinv preserved", w.dinv() == p.dinv()),
                contract("round trip", psi(&w).ok().as_ref() == Some(&p)),
            ];
            (Object::Path(p), Object::Word(w), c)
        }
        MapName::Phi => {
            let d = parse_dominoes(input)?;
            let image = phi(&d).map_err(domain)?;
            let before_ndinv = ndinv(&d).map_err(domain)?;
            let after_ndinv = ndinv(&image).map_err(domain)?;
            let step = if d.leading_block_is_singleton() { 0 } else { d.anchors() as u64 - 1 };
            let mut c = vec![contract("ndinv recursion", before_ndinv == step + after_ndinv)];
            let preimage = d.to_path().ok().and_then(|p| psi_inverse(&p).ok()).and_then(|w| eta(&w).ok());
            if let Some(pld) = &preimage {
                c.push(contract("ndinv equals dinv of the preimage", pld.dinv() == before_ndinv));
            }
            extra = json!({
                "ndinv": before_ndinv,
                "ndinv_after": after_ndinv,
                "preimage_dinv": preimage.map(|p| p.dinv()),
            });
            (Object::Dominoes(d), Object::Dominoes(image), c)
        }
        MapName::Ehh => {
            let (k, n, m) = shuffle_params(a)?;
            let d: DecoratedLabelledPath = parse(input)?;
            let p = ehh_forward(&d, k, n, m).map_err(domain)?;
            let c = vec![
                contract("area preserved", d.area() == p.area()),
                contract("dinv preserved", d.dinv() == p.dinv()),
                contract("round trip", ehh_inverse(&p).ok() == Some((d.clone(), (k, n, m)))),
            ];
            (Object::Path(d), Object::Path(p), c)
        }
        MapName::EhhInv => {
            let p: DecoratedLabelledPath = parse(input)?;
            let (d, (k, n, m)) = ehh_inverse(&p).map_err(domain)?;
            let c = vec![
                contract("area preserved", d.area() == p.area()),
                contract("dinv preserved", d.dinv() == p.dinv()),
                contract("round trip", ehh_forward(&d, k, n, m).ok().as_ref() == Some(&p)),
            ];
            extra = json!({ "k": k, "n": n, "m": m });
            (Object::Path(p), Object::Path(d), c)
        }
        MapName::PldStep => {
            let d: DecoratedLabelledPath = parse(input)?;
            catalan_params(&d).map_err(domain)?;
            let step = pld_recursive_step(&d).map_err(domain)?;
            let composite = pld_recursive_step_via_maps(&d).ok();
            let a = d.area_word();
            let touches = a.iter().filter(|&&x| x == 0).count() as u64;
            let drop = if a.len() >= 2 && a[1] == 0 { 0 } else { touches - 1 };
            let c = vec![
                contract("equals the four-map composite", composite.as_ref() == Some(&step)),
                contract("dinv drop", d.dinv().checked_sub(step.dinv()) == Some(drop)),
            ];
            (Object::Path(d), Object::Path(step), c)
        }
        MapName::ShuffleStep => {
            let (k, n, m) = shuffle_params(a)?;
            let d: DecoratedLabelledPath = parse(input)?;
            let step = shuffle_recursion_step(&d, k, n, m).map_err(domain)?;
            let diagonal = d.area_word().iter().filter(|&&x| x == 0).count() as u64;
            let c = vec![contract("area drop", d.area() - step.path.area() == d.size() as u64 - diagonal)];
            extra = json!({ "k": step.k, "n": step.n, "m": step.m, "summary": step.summary });
            (Object::Path(d), Object::Path(step.path), c)
        }
    };
    Ok((before, after, contracts, extra))
}

fn stats_json(o: &Object) -> Value {
    let (dinv, area, comp) = o.stats();
    json!({ "dinv": dinv, "area": area, "composition": comp })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn cmd_biject(a: &BijectArgs, input: &str, format: Option<Format>, out: &mut Output) -> Result<(), Failure> {
    let value: Value = serde_json::from_str(input.trim()).map_err(|e| Failure::Usage(format!("invalid JSON input: {e}")))?;
    let (before, after, contracts, extra) = apply(a, &value)?;
    match format {
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut rows = vec![vec!["side".to_string(), "object".into(), "dinv".into(), "area".into(), "composition".into()]];
            for (side, o) in [("before", &before), ("after", &after)] {
                let (d, ar, c) = o.stats();
                rows.push(vec![side.into(), o.to_json().to_string(), opt(d), opt(ar), opt(c)]);
            }
            for r in rows {
                w.write_record(&r).expect("writing to memory");
            }
            out.write(&String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8"))?;
        }
        _ => {
            let report = json!({
                "map": a.map.to_possible_value().map(|v| v.get_name().to_string()),
                "image": after.to_json(),
                "before": stats_json(&before),
                "after": stats_json(&after),
                "contracts": contracts.iter().map(|c| json!({ "name": c.name, "holds": c.holds })).collect::<Vec<_>>(),
                "extra": extra,
            });
            out.line(&report.to_string())?;
        }
    }
    let mut table = String::from("side    dinv  area  composition\n");
    for (side, o) in [("before", &before), ("after", &after)] {
        let (d, ar, c) = o.stats();
        table += &format!("{side:<7} {:>5} {:>5}  {}\n", opt(d), opt(ar), opt(c));
    }
    for c in &contracts {
        table += &format!("{}: {}\n", c.name, if c.holds { "holds" } else { "VIOLATED" });
    }
    eprint!("{table}");
    if contracts.iter().all(|c| c.holds) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
