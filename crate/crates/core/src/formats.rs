//! Readers and writers for the on-disk formats: Burmeister `.cxt`
//! contexts, DIMACS CNF, and JSON for posets, set families, training
//! contexts and implication sets.
//!
//! Sets are always written as name lists in the order of their universe,
//! and families in ascending [`BitSet`] order, so equal inputs give equal
//! bytes.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::hypotheses::TrainingContext;
use crate::implications::Implication;
use crate::poset::Poset;
use crate::reductions::Cnf;

pub fn parse_cxt(text: &str) -> Result<FormalContext> {
    let lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    let line = |i: usize| -> Result<&str> {
        lines
            .get(i)
            .copied()
            .ok_or_else(|| Error::parse(i + 1, "unexpected end of file"))
    };
    if line(0)?.trim() != "B" {
        return Err(Error::parse(1, "expected `B`"));
    }
    if !line(1)?.trim().is_empty() {
        return Err(Error::parse(2, "expected a blank line"));
    }
    let count = |i: usize| -> Result<usize> {
        line(i)?
            .trim()
            .parse()
            .map_err(|_| Error::parse(i + 1, "expected a count"))
    };
    let g = count(2)?;
    let m = count(3)?;
    if !line(4)?.trim().is_empty() {
        return Err(Error::parse(5, "expected a blank line"));
    }
    let mut at = 5;
    let mut take = |n: usize| -> Result<Vec<(usize, &str)>> {
        let out = (at..at + n).map(|i| line(i).map(|l| (i, l))).collect::<Result<Vec<_>>>()?;
        at += n;
        Ok(out)
    };
    let objects: Vec<String> = take(g)?.into_iter().map(|(_, l)| l.to_string()).collect();
    let attributes: Vec<String> = take(m)?.into_iter().map(|(_, l)| l.to_string()).collect();
    let mut rows = Vec::with_capacity(g);
    for (i, l) in take(g)? {
        let l = l.trim_end();
        if l.chars().count() != m {
            return Err(Error::parse(i + 1, format!("row has {} entries, expected {m}", l.chars().count())));
        }
        let mut row = BitSet::new(m);
        for (j, c) in l.chars().enumerate() {
            match c {
                'X' | 'x' => row.insert(j),
                '.' => {}
                other => return Err(Error::parse(i + 1, format!("unexpected character `{other}`"))),
            }
        }
        rows.push(row);
    }
    if let Some(extra) = (at..lines.len()).find(|&i| !lines[i].trim().is_empty()) {
        return Err(Error::parse(extra + 1, "content after the last row"));
    }
    FormalContext::from_rows(objects, attributes, rows)
}

pub fn write_cxt(ctx: &FormalContext) -> String {
    let mut s = format!("B\n\n{}\n{}\n\n", ctx.num_objects(), ctx.num_attributes());
    for name in ctx.objects().iter().chain(ctx.attributes()) {
        s.push_str(name);
        s.push('\n');
    }
    for row in ctx.rows() {
        s.extend((0..ctx.num_attributes()).map(|j| if row.contains(j) { 'X' } else { '.' }));
        s.push('\n');
    }
    s
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    elements: Vec<String>,
    #[serde(default)]
    less_than: Vec<(String, String)>,
}

pub fn parse_poset_json(text: &str) -> Result<Poset> {
    let f: PosetFile = serde_json::from_str(text)?;
    Poset::from_pairs(f.elements, &f.less_than)
}

/// Writes the cover relation, which determines the order.
pub fn poset_json(p: &Poset) -> Value {
    let mut less_than = Vec::new();
    for b in 0..p.len() {
        for a in p.lower_covers(b).iter() {
            less_than.push((p.names()[a].clone(), p.names()[b].clone()));
        }
    }
    serde_json::to_value(PosetFile {
        elements: p.names().to_vec(),
        less_than,
    })
    .expect("plain data")
}

fn resolve(universe: &[String], names: &[String], kind: &'static str) -> Result<BitSet> {
    let mut s = BitSet::new(universe.len());
    for n in names {
        let i = universe.iter().position(|u| u == n).ok_or_else(|| Error::UnknownName {
            kind,
            name: n.clone(),
        })?;
        s.insert(i);
    }
    Ok(s)
}

/// A family such as `[["p1"], ["p1", "p2"]]` over the names in `universe`.
pub fn parse_family_json(text: &str, universe: &[String]) -> Result<Vec<BitSet>> {
    let raw: Vec<Vec<String>> = serde_json::from_str(text)?;
    raw.iter().map(|names| resolve(universe, names, "element")).collect()
}

pub fn set_json(set: &BitSet, universe: &[String]) -> Value {
    Value::Array(set.iter().map(|i| Value::String(universe[i].clone())).collect())
}

pub fn family_json(family: &[BitSet], universe: &[String]) -> Value {
    let mut sorted = family.to_vec();
    sorted.sort();
    Value::Array(sorted.iter().map(|s| set_json(s, universe)).collect())
}

/// Comma-separated names; blanks are skipped, so `""` is the empty set.
pub fn parse_name_list(list: &str, universe: &[String]) -> Result<BitSet> {
    let names: Vec<String> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    resolve(universe, &names, "name")
}

fn parse_rows(side: &Map<String, Value>, attributes: &[String]) -> Result<FormalContext> {
    let mut names = Vec::with_capacity(side.len());
    let mut rows = Vec::with_capacity(side.len());
    for (name, row) in side {
        let row = row
            .as_str()
            .ok_or_else(|| Error::Invalid(format!("row of `{name}` must be a string")))?;
        if row.chars().count() != attributes.len() {
            return Err(Error::DimensionMismatch(format!(
                "row of `{name}` has {} entries, expected {}",
                row.chars().count(),
                attributes.len()
            )));
        }
        let mut set = BitSet::new(attributes.len());
        for (j, c) in row.chars().enumerate() {
            match c {
                'X' | 'x' => set.insert(j),
                '.' => {}
                other => return Err(Error::Invalid(format!("unexpected character `{other}` in row of `{name}`"))),
            }
        }
        names.push(name.clone());
        rows.push(set);
    }
    FormalContext::from_rows(names, attributes.to_vec(), rows)
}

#[derive(Deserialize)]
struct TrainingFile {
    attributes: Vec<String>,
    positive: Map<String, Value>,
    negative: Map<String, Value>,
}

/// `{"attributes": [...], "positive": {name: row}, "negative": {...}}` with
/// rows written as `X`/`.` strings.
pub fn parse_training_json(text: &str) -> Result<TrainingContext> {
    let f: TrainingFile = serde_json::from_str(text)?;
    TrainingContext::new(parse_rows(&f.positive, &f.attributes)?, parse_rows(&f.negative, &f.attributes)?)
}

fn rows_json(ctx: &FormalContext) -> Value {
    let mut side = Map::new();
    for (g, name) in ctx.objects().iter().enumerate() {
        let row = ctx.object_intent(g);
        let text: String = (0..ctx.num_attributes()).map(|j| if row.contains(j) { 'X' } else { '.' }).collect();
        side.insert(name.clone(), Value::String(text));
    }
    Value::Object(side)
}

pub fn training_json(t: &TrainingContext) -> Value {
    let mut doc = Map::new();
    doc.insert("attributes".into(), serde_json::to_value(t.attributes()).expect("strings"));
    doc.insert("positive".into(), rows_json(t.positive()));
    doc.insert("negative".into(), rows_json(t.negative()));
    Value::Object(doc)
}

#[derive(Serialize, Deserialize)]
struct ImplicationEntry {
    premise: Vec<String>,
    conclusion: Vec<String>,
}

/// `[{"premise": [...], "conclusion": [...]}, ...]` over `attributes`.
pub fn parse_implications_json(text: &str, attributes: &[String]) -> Result<Vec<Implication>> {
    let raw: Vec<ImplicationEntry> = serde_json::from_str(text)?;
    raw.iter()
        .map(|e| {
            Implication::new(
                resolve(attributes, &e.premise, "attribute")?,
                resolve(attributes, &e.conclusion, "attribute")?,
            )
        })
        .collect()
}

/// Keeps the given order of the implications.
pub fn implications_json(j: &[Implication], attributes: &[String]) -> Value {
    Value::Array(
        j.iter()
            .map(|i| {
                let mut o = Map::new();
                o.insert("premise".into(), set_json(&i.premise, attributes));
                o.insert("conclusion".into(), set_json(&i.conclusion, attributes));
                Value::Object(o)
            })
            .collect(),
    )
}

/// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header, then
/// clauses of nonzero literals each ended by `0`, possibly spread over
/// several lines. A line starting with `%` ends the input.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "second header"));
            }
            let parts: Vec<&str> = l.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(Error::parse(lineno, "expected `p cnf <variables> <clauses>`"));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(lineno, format!("bad count `{s}`")));
            header = Some((num(parts[2])?, num(parts[3])?));
            continue;
        }
        let (n, _) = header.ok_or_else(|| Error::parse(lineno, "clause before the header"))?;
        for tok in l.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| Error::parse(lineno, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > n {
                return Err(Error::parse(lineno, format!("literal {lit} exceeds {n} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (n, k) = header.ok_or_else(|| Error::Invalid("missing `p cnf` header".into()))?;
    if !current.is_empty() {
        return Err(Error::Invalid("last clause is not terminated by 0".into()));
    }
    if clauses.len() != k {
        return Err(Error::Invalid(format!("header announces {k} clauses, found {}", clauses.len())));
    }
    Cnf::new(n, clauses)
}

pub fn write_dimacs(f: &Cnf) -> String {
    let mut s = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.clauses() {
        for l in c {
            s.push_str(&l.to_string());
            s.push(' ');
        }
        s.push_str("0\n");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::tests::{arb_context, paper_positive};
    use proptest::prelude::*;

    const SMALL: &str = "B\n\n2\n3\n\ng1\ng2\na\nb\nc\nX.X\n.X.\n";

    #[test]
    fn cxt_round_trip_is_bit_exact() {
        let ctx = parse_cxt(SMALL).unwrap();
        assert_eq!(ctx.objects(), &["g1", "g2"]);
        assert!(ctx.incidence(0, 2));
        assert_eq!(write_cxt(&ctx), SMALL);
        assert_eq!(parse_cxt(&write_cxt(&paper_positive())).unwrap(), paper_positive());
    }

    #[test]
    fn cxt_rejections() {
        assert!(matches!(parse_cxt("A\n\n1\n1\n\ng\nm\nX\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_cxt("B\n\n1\n2\n\ng\nm\nn\nX\n"), Err(Error::Parse { line: 9, .. })));
        assert!(matches!(parse_cxt("B\n\n2\n1\n\ng\nh\nm\nX\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cxt("B\n\n1\n1\n\ng\nm\nQ\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cxt("B\n\nx\n1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(parse_cxt("B\n\n1\n1\n\ng\nm\nX\nX\n").is_err());
        assert!(parse_cxt("B\r\n\r\n1\r\n1\r\n\r\ng\r\nm\r\nX\r\n").is_ok());
    }

    #[test]
    fn poset_json_round_trip() {
        let p = parse_poset_json(r#"{"elements":["a","b","c"],"less_than":[["a","b"],["b","c"]]}"#).unwrap();
        assert!(p.leq(0, 2));
        let back = parse_poset_json(&poset_json(&p).to_string()).unwrap();
        assert_eq!(back, p);
        assert!(matches!(parse_poset_json(r#"{"elements":["a"],"less_than":[["a","z"]]}"#), Err(Error::UnknownName { .. })));
        assert!(matches!(parse_poset_json(r#"{"elements":["a","b"],"less_than":[["a","b"],["b","a"]]}"#), Err(Error::Cycle(_))));
        assert!(matches!(parse_poset_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn family_json_sorted() {
        let u: Vec<String> = vec!["p1".into(), "p2".into()];
        let fam = parse_family_json(r#"[["p2"],["p2","p1"],[]]"#, &u).unwrap();
        assert_eq!(family_json(&fam, &u).to_string(), r#"[[],["p1","p2"],["p2"]]"#);
        assert!(parse_family_json(r#"[["p3"]]"#, &u).is_err());
        assert_eq!(parse_name_list("", &u).unwrap(), BitSet::new(2));
        assert_eq!(parse_name_list("p2, p1", &u).unwrap(), BitSet::full(2));
    }

    #[test]
    fn training_json_round_trip() {
        let text = r#"{"attributes":["a","b"],"positive":{"z":"X.","y":".X"},"negative":{"n":"XX"}}"#;
        let t = parse_training_json(text).unwrap();
        assert_eq!(t.positive().objects(), &["z", "y"]);
        assert_eq!(training_json(&t).to_string(), text);
        let bad = r#"{"attributes":["a"],"positive":{"z":"X."},"negative":{}}"#;
        assert!(matches!(parse_training_json(bad), Err(Error::DimensionMismatch(_))));
        let shared = r#"{"attributes":["a"],"positive":{"z":"X"},"negative":{"z":"."}}"#;
        assert!(matches!(parse_training_json(shared), Err(Error::SharedObject(_))));
    }

    #[test]
    fn implications_json_round_trip() {
        let attrs: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        let text = r#"[{"premise":["a"],"conclusion":["b","c"]}]"#;
        let j = parse_implications_json(text, &attrs).unwrap();
        assert_eq!(j[0].conclusion, BitSet::from_indices(3, [1, 2]));
        assert_eq!(implications_json(&j, &attrs).to_string(), text);
        assert!(parse_implications_json(r#"[{"premise":["q"],"conclusion":[]}]"#, &attrs).is_err());
    }

    #[test]
    fn dimacs_examples() {
        let f = parse_dimacs("c demo\np cnf 3 2\n1 -2 0\n2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![1, -2], vec![2, 3]]);
        assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
        let empty = parse_dimacs("p cnf 1 1\n0\n").unwrap();
        assert_eq!(empty.clauses(), &[Vec::<i32>::new()]);
        assert!(parse_dimacs("p cnf 1 1\n2 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 2\n1 0\n").is_err());
        assert!(parse_dimacs("1 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n1\n").is_err());
        assert_eq!(parse_dimacs("p cnf 1 1\n1 0\n%\n0\n").unwrap().clauses().len(), 1);
    }

    proptest! {
        #[test]
        fn cxt_round_trip(ctx in arb_context(6, 6)) {
            let text = write_cxt(&ctx);
            let back = parse_cxt(&text).unwrap();
            prop_assert_eq!(write_cxt(&back), text);
            prop_assert_eq!(back, ctx);
        }
    }
}
