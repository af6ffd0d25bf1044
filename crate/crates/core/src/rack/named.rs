//! Built-in racks and the textual names that address them.

use std::path::Path;

use super::{Perm, Rack};
use crate::error::Error;

fn conj(degree: usize, cycles: &[&str]) -> Rack {
    let elements: Vec<Perm> =
        cycles.iter().map(|c| Perm::from_cycles(degree, c).expect("valid cycle")).collect();
    Rack::conjugation_quandle(&elements).expect("conjugacy class")
}

/// Transpositions `(12), (13), (23)` of S3.
pub fn d3_transpositions() -> Rack {
    conj(3, &["(12)", "(13)", "(23)"])
}

/// Reflections `(13), (24), (12)(34), (14)(23)` of the dihedral group of the square.
pub fn d4_reflections() -> Rack {
    conj(4, &["(13)", "(24)", "(12)(34)", "(14)(23)"])
}

/// The conjugacy class of `(123)` in A4.
pub fn tetrahedral() -> Rack {
    conj(4, &["(123)", "(134)", "(142)", "(243)"])
}

/// Parses a rack name:
///
/// * `trivial:n`, `dihedral:n`
/// * `conj:Sk:<cycles>,<cycles>,...` for a conjugation-closed subset of Sk
/// * the aliases `d3`, `d4` and `tetrahedral`
pub fn parse_rack_spec(spec: &str) -> Result<Rack, Error> {
    let spec = spec.trim();
    match spec {
        "d3" => return Ok(d3_transpositions()),
        "d4" | "d4-reflections" => return Ok(d4_reflections()),
        "tetrahedral" => return Ok(tetrahedral()),
        _ => {}
    }
    let (kind, rest) =
        spec.split_once(':').ok_or_else(|| Error::Parse(format!("unknown rack name {spec:?}")))?;
    let size = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse(format!("bad rack size {s:?} in {spec:?}")))
    };
    match kind {
        "trivial" => Rack::trivial(size(rest)?),
        "dihedral" => Rack::dihedral(size(rest)?),
        "conj" => {
            let (group, subset) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected conj:Sk:<subset> in {spec:?}")))?;
            let degree = group
                .strip_prefix('S')
                .ok_or_else(|| Error::Parse(format!("expected a symmetric group Sk, got {group:?}")))
                .and_then(size)?;
            if degree == 0 || degree > 64 {
                return Err(Error::Parse(format!("unsupported degree {degree}")));
            }
            let elements = split_top_level(subset)?
                .into_iter()
                .map(|c| Perm::from_cycles(degree, c))
                .collect::<Result<Vec<_>, _>>()?;
            if elements.is_empty() {
                return Err(Error::EmptyRack);
            }
            for (i, p) in elements.iter().enumerate() {
                if elements[..i].contains(p) {
                    return Err(Error::Parse(format!("element {p} listed twice")));
                }
            }
            Rack::conjugation_quandle(&elements)
        }
        _ => Err(Error::Parse(format!("unknown rack kind {kind:?}"))),
    }
}

/// Splits on commas that are outside parentheses.
fn split_top_level(s: &str) -> Result<Vec<&str>, Error> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    parts.push(s[start..].trim());
    Ok(parts.into_iter().filter(|p| !p.is_empty()).collect())
}

/// A path to a rack JSON file if one exists there, otherwise a rack name.
pub fn load_rack(arg: &str) -> Result<Rack, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?;
        return Rack::from_json_str(&text);
    }
    parse_rack_spec(arg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(parse_rack_spec("trivial:3").unwrap(), Rack::trivial(3).unwrap());
        assert_eq!(parse_rack_spec("dihedral:5").unwrap().size(), 5);
        assert_eq!(
            parse_rack_spec("conj:S4:(13),(24),(12)(34),(14)(23)").unwrap(),
            d4_reflections()
        );
        assert_eq!(parse_rack_spec("conj:S3:e").unwrap().size(), 1);
        assert_eq!(parse_rack_spec("d3").unwrap(), d3_transpositions());
    }

    #[test]
    fn bad_names() {
        for s in ["", "trivial", "trivial:0", "trivial:x", "conj:S3", "conj:T3:(12)", "conj:S3:(12),(13)", "conj:S3:(12),(12)", "conj:S3:((12)", "foo:3"] {
            assert!(parse_rack_spec(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn dihedral_three_matches_transpositions() {
        // 2y - x mod 3 is the transposition quandle under the relabelling
        // (12) -> 0, (13) -> 2, (23) -> 1
        let d = Rack::dihedral(3).unwrap();
        let t = d3_transpositions();
        let relabel = [0, 2, 1];
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(relabel[d.op(x, y)], t.op(relabel[x], relabel[y]));
            }
        }
    }
}
