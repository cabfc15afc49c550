use std::fmt;
use std::str::FromStr;

/// Inclusive index range `a:b[:step]`; a bare `a` means `a:a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
    pub step: usize,
}

impl IndexRange {
    pub fn single(n: usize) -> Self {
        IndexRange {
            start: n,
            end: n,
            step: 1,
        }
    }

    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.end).step_by(self.step).collect()
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{p}` is not a non-negative integer"))
        };
        let (start, end, step) = match parts.as_slice() {
            [a] => (num(a)?, num(a)?, 1),
            [a, b] => (num(a)?, num(b)?, 1),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(format!("`{s}` is not of the form a:b[:step]")),
        };
        if step == 0 {
            return Err("step must be at least 1".into());
        }
        if end < start {
            return Err(format!("range end {end} is below its start {start}"));
        }
        Ok(IndexRange { start, end, step })
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.end, self.step)
    }
}
