use anyhow::{anyhow, bail, Context, Result};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};
use tamari::enumeration::Enumerator;
use tamari::interval_poset::parse_relation_list;
use tamari::m_tamari::{ballot_to_m_binary, m_binary_to_mary, mary_to_m_binary};
use tamari::polynomials::{
    formula_inm, m_tamari_poly, phi_m_series, tamari_poly, tamari_poly_b, tamari_poly_mirror,
    weight_pi, weight_pim,
};
use tamari::{
    gen_interval_posets, gen_m_interval_posets, BinaryTree, DyckPath, IntervalPoset, MAryTree,
    MBallotPath, XYPoly,
};

use crate::{ComposeArgs, ConvertArgs, CountArgs, DecomposeArgs, Format, IntervalArgs, PolyArgs};

/// Text lines and the equivalent JSON document. `ok` is false when a
/// requested check failed.
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn new(lines: Vec<String>, json: Value) -> Self {
        Self {
            lines,
            json,
            ok: true,
        }
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).with_context(|| format!("invalid JSON: {text}"))
}

fn need_m(m: Option<usize>, format: Format) -> Result<usize> {
    m.ok_or_else(|| anyhow!("--m is required for the {format:?} format"))
}

fn read_tree(format: Format, input: &str, m: Option<usize>) -> Result<BinaryTree> {
    Ok(match format {
        Format::Dyck => BinaryTree::from_dyck(&input.parse::<DyckPath>()?),
        Format::TreeJson => BinaryTree::from_json(&parse_json(input)?)?,
        Format::Ballot => ballot_to_m_binary(&MBallotPath::parse(input, need_m(m, format)?)?),
        Format::Mary => {
            let m = need_m(m, format)?;
            mary_to_m_binary(&MAryTree::from_json(&parse_json(input)?, m)?, m)?
        }
    })
}

fn write_tree(format: Format, tree: &BinaryTree, m: Option<usize>) -> Result<Value> {
    Ok(match format {
        Format::Dyck => Value::from(tree.to_dyck().to_string()),
        Format::TreeJson => tree.to_json(),
        Format::Ballot => {
            let ballot = MBallotPath::from_mdyck(&tree.to_dyck(), need_m(m, format)?)?;
            Value::from(ballot.to_string())
        }
        Format::Mary => m_binary_to_mary(tree, need_m(m, format)?)?.to_json(),
    })
}

fn render(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn convert(args: &ConvertArgs) -> Result<Report> {
    let tree = read_tree(args.from, args.input.trim(), args.m)?;
    let value = write_tree(args.to, &tree, args.m)?;
    Ok(Report::new(vec![render(&value)], json!({ "value": value })))
}

fn big_json(v: &BigUint) -> Value {
    let text = v.to_string();
    text.parse::<u64>().map_or(Value::from(text), Value::from)
}

pub fn count(args: &CountArgs) -> Result<Report> {
    let (n, m) = (args.n, args.m);
    if m == 0 {
        bail!(tamari::Error::ZeroArity);
    }
    let enumerator = if args.force {
        Enumerator::forced()
    } else {
        Enumerator::new()
    };
    enumerator.check_scale(n, m)?;
    let posets = if m == 1 {
        gen_interval_posets(n)
    } else {
        gen_m_interval_posets(n, m)?
    };
    let generated = BigUint::from(posets.len());
    let formula = formula_inm(n, m)?;
    let mut values = vec![generated.clone(), formula.clone()];
    let mut names = vec!["generator", "formula"];
    let mut doc = json!({
        "n": n,
        "m": m,
        "generator": big_json(&generated),
        "formula": big_json(&formula),
    });
    if args.oracle {
        let oracle = BigUint::from(enumerator.oracle_count_pairs_m(n, m)?);
        doc["oracle"] = big_json(&oracle);
        values.push(oracle);
        names.push("oracle");
    }
    let mut ok = values.iter().all(|v| *v == values[0]);
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    let sep = if ok { " = " } else { " != " };
    let mut lines = vec![format!("{}: {}", names.join(" = "), shown.join(sep))];
    if args.refined {
        let refined = enumerator.refined_count_m::<BigInt>(n, m)?;
        let series = phi_m_series::<BigInt>(n, m)?.y_slice(n);
        let agrees = refined == series;
        ok &= agrees;
        lines.push(format!("refined: {refined}"));
        if !agrees {
            lines.push(format!("series slice differs: {series}"));
        }
        doc["refined"] = json!({ "text": refined.to_string(), "polynomial": refined.to_json(), "series_agrees": agrees });
    }
    doc["agree"] = Value::from(ok);
    Ok(Report {
        lines,
        json: doc,
        ok,
    })
}

pub fn poly(args: &PolyArgs) -> Result<Report> {
    let tree = BinaryTree::from_dyck(&args.tree.trim().parse::<DyckPath>()?);
    let p: XYPoly = match (args.m, args.mirror, args.b) {
        (Some(m), _, _) => m_tamari_poly(&tree, m)?,
        (None, true, _) => tamari_poly_mirror(&tree),
        (None, false, true) => tamari_poly_b(&tree),
        (None, false, false) => tamari_poly(&tree),
    };
    let mut doc = json!({ "text": p.to_string(), "polynomial": p.to_json() });
    let line = if args.at_one {
        let value = p.eval_one();
        doc["value"] = Value::from(value.to_string());
        value.to_string()
    } else {
        p.to_string()
    };
    Ok(Report::new(vec![line], doc))
}

fn read_poset(text: &str) -> Result<IntervalPoset> {
    Ok(IntervalPoset::from_json(&parse_json(text)?)?)
}

pub fn interval(args: &IntervalArgs) -> Result<Report> {
    let ip = match (&args.relations, &args.trees) {
        (Some(rel), _) => {
            let size = args
                .size
                .ok_or_else(|| anyhow!("--relations needs --size"))?;
            IntervalPoset::new(size, parse_relation_list(&parse_json(rel)?)?)?
        }
        (None, Some(words)) => {
            let lower = BinaryTree::from_dyck(&words[0].parse::<DyckPath>()?);
            let upper = BinaryTree::from_dyck(&words[1].parse::<DyckPath>()?);
            IntervalPoset::from_tree_pair(&lower, &upper)?
        }
        (None, None) => bail!("give --relations or --trees"),
    };
    let word = |t: BinaryTree| t.to_dyck().to_string();
    let report = if args.lower {
        let w = word(ip.lower_tree()?);
        Report::new(vec![w.clone()], json!({ "lower": w }))
    } else if args.upper {
        let w = word(ip.upper_tree()?);
        Report::new(vec![w.clone()], json!({ "upper": w }))
    } else if args.contents {
        let words: Vec<String> = ip.trees_in_interval().into_iter().map(word).collect();
        Report::new(words.clone(), json!({ "contents": words }))
    } else if args.linext {
        let perms: Vec<String> = ip
            .linear_extensions()
            .iter()
            .map(ToString::to_string)
            .collect();
        Report::new(perms.clone(), json!({ "linear_extensions": perms }))
    } else if args.dot {
        let dot = ip.to_dot();
        Report::new(
            dot.lines().map(String::from).collect(),
            json!({ "dot": dot }),
        )
    } else {
        let s = ip.stats();
        let lines = vec![
            ip.to_json().to_string(),
            format!("size {}, trees {}, rises {}", s.size, s.trees, s.rises_b),
        ];
        Report::new(
            lines,
            json!({ "poset": ip.to_json(), "size": s.size, "trees": s.trees, "rises": s.rises_b }),
        )
    };
    Ok(report)
}

pub fn compose(args: &ComposeArgs) -> Result<Report> {
    let left = read_poset(&args.left)?;
    let rights = args
        .right
        .iter()
        .map(|r| read_poset(r))
        .collect::<Result<Vec<_>>>()?;
    let m_mode = args.m.is_some() || rights.len() > 1;
    let (terms, weights): (Vec<IntervalPoset>, Vec<XYPoly>) = if m_mode {
        let m = args.m.unwrap_or(rights.len());
        if rights.len() != m {
            bail!(tamari::Error::ArityMismatch {
                expected: m,
                found: rights.len()
            });
        }
        let terms = tamari::m_compose(&left, &rights)?.into_terms();
        let weights = terms
            .iter()
            .map(|t| weight_pim(t, m))
            .collect::<tamari::Result<_>>()?;
        (terms, weights)
    } else {
        let terms = tamari::compose(&left, &rights[0]).into_terms();
        let weights = terms.iter().map(weight_pi).collect();
        (terms, weights)
    };
    let total = weights.iter().fold(XYPoly::zero(), |acc, w| acc + w);
    let mut lines: Vec<String> = terms
        .iter()
        .zip(&weights)
        .map(|(t, w)| format!("{}  {w}", t.to_json()))
        .collect();
    lines.push(format!("total: {total}"));
    let docs: Vec<Value> = terms
        .iter()
        .zip(&weights)
        .map(|(t, w)| json!({ "poset": t.to_json(), "weight": w.to_string() }))
        .collect();
    Ok(Report::new(
        lines,
        json!({ "terms": docs, "total": total.to_string(), "total_polynomial": total.to_json() }),
    ))
}

pub fn decompose(args: &DecomposeArgs) -> Result<Report> {
    let ip = read_poset(&args.poset)?;
    let (left, rights) = match args.m {
        None => {
            let (l, r) = tamari::decompose(&ip)?;
            (l, vec![r])
        }
        Some(m) => tamari::m_decompose(&ip, m)?,
    };
    let mut lines = vec![format!("left: {}", left.to_json())];
    lines.extend(
        rights
            .iter()
            .enumerate()
            .map(|(i, r)| format!("right {}: {}", i + 1, r.to_json())),
    );
    let doc = json!({
        "left": left.to_json(),
        "rights": rights.iter().map(IntervalPoset::to_json).collect::<Vec<_>>(),
    });
    Ok(Report::new(lines, doc))
}
