//! Dyck paths stored as words over `{1, 0}` (`1` = up step, `0` = down step).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<bool>,
}

/// Parses a word of `'1'`/`'0'` characters into raw steps without any
/// Dyck constraint.
pub fn parse_steps(word: &str) -> Result<Vec<bool>> {
    word.trim()
        .chars()
        .map(|c| match c {
            '1' => Ok(true),
            '0' => Ok(false),
            other => Err(Error::BadStep(other)),
        })
        .collect()
}

pub(crate) fn steps_to_string(steps: &[bool]) -> String {
    steps.iter().map(|&s| if s { '1' } else { '0' }).collect()
}

impl DyckPath {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates a step sequence: equal numbers of up and down steps, and
    /// no prefix with more downs than ups.
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let ups = steps.iter().filter(|&&s| s).count();
        let downs = steps.len() - ups;
        if ups != downs {
            return Err(Error::UnbalancedWord { ups, downs });
        }
        let mut height = 0i64;
        for (i, &s) in steps.iter().enumerate() {
            height += if s { 1 } else { -1 };
            if height < 0 {
                return Err(Error::PrefixViolation(i + 1));
            }
        }
        Ok(Self { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<bool>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of returns to the axis after the starting point.
    pub fn touch_points(&self) -> usize {
        let mut height = 0i64;
        let mut touches = 0;
        for &s in &self.steps {
            height += if s { 1 } else { -1 };
            if height == 0 {
                touches += 1;
            }
        }
        touches
    }

    /// Lengths of the maximal runs of consecutive up steps.
    pub fn up_runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut current = 0;
        for &s in &self.steps {
            if s {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }

    /// Index one past the end of the primitive factor starting at `start`,
    /// i.e. the first position where the height returns to its starting
    /// level. `None` if `start` is not an up step.
    fn primitive_end(&self, start: usize) -> Option<usize> {
        if !*self.steps.get(start)? {
            return None;
        }
        let mut height = 0i64;
        for (offset, &s) in self.steps[start..].iter().enumerate() {
            height += if s { 1 } else { -1 };
            if height == 0 {
                return Some(start + offset + 1);
            }
        }
        None
    }

    /// Rotation: moves the down step at `down_step_index` past the
    /// primitive Dyck factor that immediately follows it.
    pub fn rotate(&self, down_step_index: usize) -> Result<Self> {
        match self.steps.get(down_step_index) {
            Some(false) => {}
            _ => return Err(Error::NotADownStep(down_step_index)),
        }
        let start = down_step_index + 1;
        let end = self
            .primitive_end(start)
            .ok_or(Error::NoFollowingPrimitive(down_step_index))?;
        let mut steps = self.steps.clone();
        steps[down_step_index..end].rotate_left(1);
        Ok(Self { steps })
    }

    /// All down-step positions where a rotation applies.
    pub fn rotatable_positions(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| !w[0] && w[1])
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_to_string(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_steps(s)?)
    }
}
