//! ASCII drawings of Vogan diagrams.
//!
//! Painted nodes are `*`, unpainted `o`. Bonds are `--`, `==` and `≡≡`.
//! Branched types (D, E) use a second line with the extra node under the
//! node it is attached to:
//!
//! ```text
//! *--o--o--o--o
//!       o
//! ```

use vogan_core::rootsys::cartan_matrix;
use vogan_core::{DynkinType, Error, Letter, NodeSet, VoganDiagram};

fn node(vd: &VoganDiagram, i: usize) -> char {
    if vd.painted().contains(i) {
        '*'
    } else {
        'o'
    }
}

pub fn render_diagram_ascii(vd: &VoganDiagram) -> String {
    let dt = vd.dtype();
    let l = dt.rank();
    let branched = matches!(dt.letter(), Letter::D | Letter::E);
    let main = if branched { l - 1 } else { l };
    let cartan = cartan_matrix(dt);
    let mut line = String::new();
    for i in 0..main {
        if i > 0 {
            let bond = match cartan.entry(i - 1, i) * cartan.entry(i, i - 1) {
                1 => "--",
                2 => "==",
                _ => "≡≡",
            };
            line.push_str(bond);
        }
        line.push(node(vd, i));
    }
    if branched {
        let attach = dt.edges().last().unwrap().0;
        line.push('\n');
        line.push_str(&" ".repeat(3 * attach));
        line.push(node(vd, l - 1));
    }
    line
}

fn bad(s: &str) -> Error {
    Error::ParseType(s.to_string())
}

/// Inverse of [`render_diagram_ascii`].
pub fn parse_diagram_ascii(text: &str) -> Result<VoganDiagram, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines.next().ok_or_else(|| bad(text))?;
    let second = lines.next();
    if lines.next().is_some() {
        return Err(bad(text));
    }
    let chars: Vec<char> = first.trim_end().chars().collect();
    let mut painted = Vec::new();
    let mut bonds = Vec::new();
    let mut k = 0;
    loop {
        match chars.get(k) {
            Some('*') => painted.push(true),
            Some('o') => painted.push(false),
            _ => return Err(bad(text)),
        }
        k += 1;
        if k == chars.len() {
            break;
        }
        let bond = match (chars.get(k), chars.get(k + 1)) {
            (Some('-'), Some('-')) => 1,
            (Some('='), Some('=')) => 2,
            (Some('≡'), Some('≡')) => 3,
            _ => return Err(bad(text)),
        };
        bonds.push(bond);
        k += 2;
    }
    let main = painted.len();
    let dtype = if let Some(second) = second {
        let col = second.chars().position(|c| c != ' ').ok_or_else(|| bad(text))?;
        let rest: String = second.chars().skip(col).collect();
        match rest.as_str() {
            "*" => painted.push(true),
            "o" => painted.push(false),
            _ => return Err(bad(text)),
        }
        if col % 3 != 0 || bonds.iter().any(|&b| b != 1) {
            return Err(bad(text));
        }
        let attach = col / 3;
        let l = main + 1;
        if main >= 3 && attach == main - 2 {
            DynkinType::new(Letter::D, l)?
        } else if (main, attach) == (5, 2) || (main, attach) == (6, 3) || (main, attach) == (7, 4) {
            DynkinType::new(Letter::E, l)?
        } else {
            return Err(bad(text));
        }
    } else {
        let doubles: Vec<usize> = bonds.iter().enumerate().filter(|(_, &b)| b == 2).map(|(i, _)| i).collect();
        match (bonds.contains(&3), doubles.as_slice()) {
            (true, _) if main == 2 => DynkinType::new(Letter::G, 2)?,
            (false, []) => DynkinType::new(Letter::A, main)?,
            (false, [0]) => DynkinType::new(Letter::B, main)?,
            (false, [1]) if main == 4 => DynkinType::new(Letter::F, 4)?,
            (false, [i]) if *i == main - 2 => DynkinType::new(Letter::C, main)?,
            _ => return Err(bad(text)),
        }
    };
    let mut set = NodeSet::EMPTY;
    for (i, &p) in painted.iter().enumerate() {
        if p {
            set.insert(i);
        }
    }
    VoganDiagram::from_nodes(dtype, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vd(t: &str, p: &[usize]) -> VoganDiagram {
        VoganDiagram::new(t.parse().unwrap(), p).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(render_diagram_ascii(&vd("B2", &[2])), "o==*");
        assert_eq!(render_diagram_ascii(&vd("G2", &[1])), "*≡≡o");
        assert_eq!(render_diagram_ascii(&vd("E6", &[1])), "*--o--o--o--o\n      o");
        assert_eq!(render_diagram_ascii(&vd("D4", &[4])), "o--o--o\n   *");
        assert_eq!(render_diagram_ascii(&vd("F4", &[1, 4])), "*--o==o--*");
        assert_eq!(render_diagram_ascii(&vd("C3", &[3])), "o--o==*");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_diagram_ascii("o-o").is_err());
        assert!(parse_diagram_ascii("").is_err());
        assert!(parse_diagram_ascii("o--o").is_err_and(|e| e == Error::EmptyPainted));
        assert!(parse_diagram_ascii("*--o\n o").is_err());
    }
}
