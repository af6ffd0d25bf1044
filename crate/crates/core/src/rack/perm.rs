use std::fmt;

use crate::error::Error;

/// A permutation of `0..n`, acting on the right: `x^(pq) = (x^p)^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation on `{1..degree}`, e.g. `(12)(34)`, `(1 10 3)` or `()`.
    /// Inside a cycle, points are separated by spaces or commas; without
    /// separators every digit is one point.
    pub fn from_cycles(degree: usize, s: &str) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..degree).collect();
        let s = s.trim();
        if s == "e" || s == "()" {
            return Ok(Perm { images });
        }
        let mut rest = s;
        let mut touched = vec![false; degree];
        while !rest.is_empty() {
            let inner_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation {s:?}")))?;
            let close = inner_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
            let body = &inner_start[..close];
            rest = inner_start[close + 1..].trim_start();
            let points: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                    .collect::<Result<_, _>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad point {c:?} in {s:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!("point {p} outside 1..={degree}")));
                }
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(Error::Parse(format!("point {p} repeated in {s:?}")));
                }
            }
            for (k, &p) in points.iter().enumerate() {
                images[p - 1] = points[(k + 1) % points.len()] - 1;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Perm { images: inv }
    }

    /// `other^-1 self other`, i.e. apply `other^-1`, then `self`, then `other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation on `1..=n`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let sep = if n > 9 { " " } else { "" };
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.images[x];
            }
            write!(f, "({})", cycle.join(sep))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
