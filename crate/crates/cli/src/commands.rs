use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use tropical_toric::classrecovery::{
    class_from_tropical, class_from_tropical_cox, class_wonderful_compactification, huh_katz_check, CoxPolynomial,
    LinearSystem,
};
use tropical_toric::io::{
    from_json, render_cycle, to_json, CycleJson, DeserializeOwned, FanJson, IdealJson, JsonInt, JsonRat, MatroidJson,
    PolyJson, TropicalJson,
};
use tropical_toric::matroid::{chromatic_polynomial, nested_set_fan, BuildingSet, Polynomial};
use tropical_toric::polyhedra::{cone_contains, ConeMembershipQuery, Fan};
use tropical_toric::toric::{ToricCycle, ToricDivisor, ToricVariety};
use tropical_toric::tropical::{
    displacement_pairing, stable_intersection, tropical_hypersurface, BalanceReport, TropicalCycle,
};

use crate::{Building, ClassCmd, Cli, Command, ConeCmd, FanCmd, MatroidCmd, ToricCmd, TropCmd};

fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn fan(path: &Path) -> Result<Fan> {
    Ok(load::<FanJson>(path)?.into_fan()?)
}

fn variety(path: &Path) -> Result<Arc<ToricVariety>> {
    Ok(ToricVariety::new(fan(path)?)?)
}

fn tropical(path: &Path, unchecked: bool) -> Result<TropicalCycle> {
    Ok(load::<TropicalJson>(path)?.into_cycle(unchecked)?)
}

fn cycle(x: &Arc<ToricVariety>, path: &Path) -> Result<ToricCycle> {
    Ok(load::<CycleJson>(path)?.into_cycle(x)?)
}

fn divisor(x: &Arc<ToricVariety>, path: &Path) -> Result<ToricDivisor> {
    Ok(ToricDivisor::from_cycle(&cycle(x, path)?)?)
}

fn lines(s: String) -> String {
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}

fn show_cycle(z: &ToricCycle, as_json: bool) -> String {
    if as_json {
        to_json(&CycleJson::from_cycle(z))
    } else {
        render_cycle(z)
    }
}

fn show_tropical(t: &TropicalCycle) -> String {
    to_json(&TropicalJson::from_cycle(t))
}

fn show_poly(p: &Polynomial, as_json: bool) -> String {
    if as_json {
        let c: Vec<JsonInt> = p.coefficients().iter().cloned().map(JsonInt).collect();
        to_json(&json!({ "coefficients": c }))
    } else {
        p.to_string()
    }
}

fn show_value(v: Value, text: String, as_json: bool) -> String {
    if as_json {
        to_json(&v)
    } else {
        text
    }
}

fn building_set(b: Building) -> BuildingSet {
    match b {
        Building::Maximal => BuildingSet::Maximal,
        Building::Minimal => BuildingSet::Minimal,
    }
}

pub fn run(cli: &Cli) -> Result<String> {
    let (seed, js) = (cli.seed, cli.json);
    let out = match &cli.command {
        Command::Fan(c) => match c {
            FanCmd::Check { fan: p } => {
                let report = fan(p)?.validate();
                let v: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                let text = if v.is_empty() { "ok".to_string() } else { v.join("\n") };
                show_value(json!({ "ok": v.is_empty(), "violations": v }), text, js)
            }
            FanCmd::Complete { fan: p } => fan(p)?.is_complete()?.to_string(),
            FanCmd::Simplicial { fan: p } => fan(p)?.is_simplicial()?.to_string(),
        },
        Command::Toric(c) => match c {
            ToricCmd::Intersect { variety: v, divisor: d, cycle: z } => {
                let x = variety(&v.variety)?;
                show_cycle(&divisor(&x, d)?.times(&cycle(&x, z)?)?, js)
            }
            ToricCmd::Deg { variety: v, cycle: z } => {
                let x = variety(&v.variety)?;
                let d = cycle(&x, z)?.degree()?;
                show_value(json!(JsonRat(d.clone())), d.to_string(), js)
            }
            ToricCmd::MakeTransverse { variety: v, divisor: d, avoid } => {
                let x = variety(&v.variety)?;
                show_cycle(&divisor(&x, d)?.make_transverse(avoid)?.to_cycle(), js)
            }
            ToricCmd::Product { left, right } => {
                let p = ToricVariety::cartesian_product(&*variety(left)?, &*variety(right)?)?;
                to_json(&FanJson::from_fan(p.fan()))
            }
        },
        Command::Trop(c) => match c {
            TropCmd::Hypersurface { poly, max } => {
                let f = load::<PolyJson>(poly)?.into_poly()?;
                let f = if *max { f.negate_exponents() } else { f };
                show_tropical(&tropical_hypersurface(&f)?)
            }
            TropCmd::Balance { cycle: p } => match tropical(p, true)?.check_balancing() {
                BalanceReport::Balanced => show_value(json!({ "balanced": true }), "balanced".into(), js),
                BalanceReport::Failure(tau) => {
                    let text = format!("unbalanced at cone {tau:?}");
                    show_value(json!({ "balanced": false, "cone": tau }), text, js)
                }
            },
            TropCmd::StableIntersect { a, b } => {
                show_tropical(&stable_intersection(&tropical(a, false)?, &tropical(b, false)?, seed)?)
            }
            TropCmd::Pairing { variety: v, cycle: p, cone } => {
                let x = variety(&v.variety)?;
                let d = displacement_pairing(&tropical(p, false)?, &x, cone, seed)?;
                show_value(json!(JsonRat(d.clone())), d.to_string(), js)
            }
        },
        Command::Matroid(c) => match c {
            MatroidCmd::Flats { matroid } => {
                let m = load::<MatroidJson>(matroid)?.to_matroid()?;
                let lattice = m.flat_lattice()?;
                let set =
                    |e: Vec<usize>| format!("{{{}}}", e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
                let text = (0..=m.rank())
                    .map(|r| {
                        let fs: Vec<String> = lattice.of_rank(r).into_iter().map(|f| set(f.elements())).collect();
                        format!("rank {r}: {}", fs.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                let v: Vec<Value> =
                    lattice.flats.iter().map(|f| json!({ "rank": f.rank, "elements": f.elements() })).collect();
                show_value(Value::Array(v), text, js)
            }
            MatroidCmd::Charpoly { matroid, reduced } => {
                let m = load::<MatroidJson>(matroid)?.to_matroid()?;
                let p = if *reduced { m.reduced_characteristic_polynomial()? } else { m.characteristic_polynomial()? };
                show_poly(&p, js)
            }
            MatroidCmd::Bergman { matroid, dehomogenize_index, building } => {
                let m = load::<MatroidJson>(matroid)?.to_matroid()?;
                show_tropical(&nested_set_fan(&m, building_set(*building), *dehomogenize_index)?)
            }
            MatroidCmd::Chromatic { graph } => {
                let Some(edges) = load::<MatroidJson>(graph)?.edges() else {
                    bail!("expected a graph: {{\"graph\": {{\"edges\": [[u,v],...]}}}}");
                };
                show_poly(&chromatic_polynomial(&edges), js)
            }
        },
        Command::Class(c) => match c {
            ClassCmd::FromTrop { variety: v, ideal } => {
                let x = variety(&v.variety)?;
                let i = load::<IdealJson>(ideal)?.into_ideal()?;
                show_cycle(&class_from_tropical(&x, &i, seed)?.cycle, js)
            }
            ClassCmd::FromCox { variety: v, poly } => {
                let x = variety(&v.variety)?;
                let (vars, terms) = load::<PolyJson>(poly)?.into_terms();
                if vars != x.num_rays() {
                    bail!("a Cox ring polynomial needs one variable per ray ({}), found {vars}", x.num_rays());
                }
                let g = CoxPolynomial::new(x.clone(), terms)?;
                show_cycle(&class_from_tropical_cox(&x, &g, seed)?.cycle, js)
            }
            ClassCmd::Wonderful { matroid, poly, trop, building } => {
                let lin = LinearSystem::from_realization(&load::<MatroidJson>(matroid)?.realization()?)?;
                let x = ToricVariety::new(nested_set_fan(&lin.matroid()?, building_set(*building), 0)?.fan().clone())?;
                let f = load::<PolyJson>(poly)?.into_poly()?;
                let target = trop.as_deref().map(|p| tropical(p, false)).transpose()?;
                show_cycle(&class_wonderful_compactification(&x, &lin, &f, target.as_ref(), seed)?, js)
            }
            ClassCmd::HuhKatz { graph, matroid } => {
                let path = graph.as_deref().or(matroid.as_deref()).expect("clap requires one");
                let input = load::<MatroidJson>(path)?;
                if graph.is_some() && input.edges().is_none() {
                    bail!("--graph expects {{\"graph\": {{\"edges\": ...}}}}");
                }
                let r = huh_katz_check(&input.to_matroid()?, seed)?;
                let nums = |v: Vec<String>| v.join(" ");
                if js {
                    to_json(&json!({
                        "reduced": r.reduced.coefficients().iter().cloned().map(JsonInt).collect::<Vec<_>>(),
                        "a": r.a.iter().cloned().map(JsonInt).collect::<Vec<_>>(),
                        "classCoefficients": r.class_coefficients.iter().cloned().map(JsonRat).collect::<Vec<_>>(),
                        "class": r.class.as_ref().map(CycleJson::from_cycle),
                        "matches": r.matches,
                        "logConcave": r.log_concave,
                    }))
                } else {
                    [
                        format!("reduced characteristic polynomial: {}", r.reduced),
                        format!("a: {}", nums(r.a.iter().map(|x| x.to_string()).collect())),
                        format!("class: {}", r.class.as_ref().map_or("[point]".to_string(), render_cycle)),
                        format!(
                            "class coefficients: {}",
                            nums(r.class_coefficients.iter().map(|x| x.to_string()).collect())
                        ),
                        format!("matches: {}", r.matches),
                        format!("log-concave: {}", r.log_concave),
                    ]
                    .join("\n")
                }
            }
        },
        Command::Cone(ConeCmd::Contains { point, generators }) => {
            let p: Vec<JsonRat> = load(point)?;
            let g: Vec<Vec<JsonRat>> = load(generators)?;
            let q = ConeMembershipQuery {
                point: p.into_iter().map(|x| x.0).collect(),
                generators: g.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect(),
            };
            cone_contains(&q)?.to_string()
        }
    };
    Ok(lines(out))
}
