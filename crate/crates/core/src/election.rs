//! Elections, committees, instances and exact scoring.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{HarmonicScale, Rational};

/// An approval election: `m` candidates and a multiset of votes.
///
/// Votes keep their position as a stable identity, so duplicate votes stay
/// distinct members of the multiset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Election {
    m: usize,
    votes: Vec<Vec<usize>>,
    approvers: Vec<Vec<usize>>,
}

impl Election {
    /// Builds an election, sorting and de-duplicating every vote.
    pub fn new(m: usize, votes: Vec<Vec<usize>>) -> Result<Self> {
        let mut votes = votes;
        for (i, v) in votes.iter_mut().enumerate() {
            v.sort_unstable();
            v.dedup();
            if let Some(&c) = v.last() {
                if c >= m {
                    return Err(Error::InvalidElection(format!("vote {i} approves candidate {c} but m = {m}")));
                }
            }
        }
        let mut approvers = vec![Vec::new(); m];
        for (i, v) in votes.iter().enumerate() {
            for &c in v {
                approvers[c].push(i);
            }
        }
        Ok(Election { m, votes, approvers })
    }

    pub fn empty() -> Self {
        Election { m: 0, votes: Vec::new(), approvers: Vec::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.votes.len()
    }

    pub fn votes(&self) -> &[Vec<usize>] {
        &self.votes
    }

    pub fn vote(&self, i: usize) -> &[usize] {
        &self.votes[i]
    }

    /// `V(c)`: indices of the votes approving `c`, ascending.
    pub fn approvers(&self, c: usize) -> &[usize] {
        &self.approvers[c]
    }

    pub fn approves(&self, vote: usize, c: usize) -> bool {
        self.votes[vote].binary_search(&c).is_ok()
    }

    pub fn max_vote_size(&self) -> usize {
        self.votes.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_approvals(&self) -> usize {
        self.approvers.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The sub-election on the given votes (in the given order), same candidates.
    pub fn restrict_votes(&self, keep: &[usize]) -> Election {
        let votes = keep.iter().map(|&i| self.votes[i].clone()).collect();
        Election::new(self.m, votes).expect("restriction of a valid election")
    }
}

impl fmt::Debug for Election {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Election(m={}, votes={:?})", self.m, self.votes)
    }
}

/// A set of candidates, stored sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Committee(Vec<usize>);

impl Committee {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Committee(members)
    }

    pub fn empty() -> Self {
        Committee(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Tops the committee up to `k` members with the smallest candidates
    /// from `pool` that are not already present.
    pub fn filled(self, k: usize, pool: impl IntoIterator<Item = usize>) -> Committee {
        let mut members = self.0;
        if members.len() < k {
            let mut extra = Vec::new();
            for c in pool {
                if members.len() + extra.len() >= k {
                    break;
                }
                if members.binary_search(&c).is_err() && !extra.contains(&c) {
                    extra.push(c);
                }
            }
            members.extend(extra);
        }
        Committee::new(members)
    }
}

impl From<Vec<usize>> for Committee {
    fn from(v: Vec<usize>) -> Self {
        Committee::new(v)
    }
}

impl fmt::Debug for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Mav,
    Ccav,
    Pav,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::Mav, Rule::Ccav, Rule::Pav];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Mav => "mav",
            Rule::Ccav => "ccav",
            Rule::Pav => "pav",
        }
    }

    /// Whether lower scores are better (only MAV).
    pub fn minimizes(self) -> bool {
        self == Rule::Mav
    }

    /// Does `score` meet threshold `d` under this rule?
    pub fn meets(self, score: Rational, d: Rational) -> bool {
        match self {
            Rule::Mav => score <= d,
            Rule::Ccav | Rule::Pav => score >= d,
        }
    }

    /// Is `a` strictly better than `b`?
    pub fn better(self, a: Rational, b: Rational) -> bool {
        match self {
            Rule::Mav => a < b,
            Rule::Ccav | Rule::Pav => a > b,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mav" => Ok(Rule::Mav),
            "ccav" => Ok(Rule::Ccav),
            "pav" => Ok(Rule::Pav),
            other => Err(format!("unknown rule {other:?}")),
        }
    }
}

/// A winner-determination question: is there a `k`-committee whose score
/// meets `d` (at most `d` for MAV, at least `d` otherwise)?
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Instance {
    pub election: Election,
    pub rule: Rule,
    pub k: usize,
    pub d: Rational,
}

impl Instance {
    pub fn new(election: Election, rule: Rule, k: usize, d: Rational) -> Result<Self> {
        if k > election.m() {
            return Err(Error::InvalidInstance(format!("committee size {k} exceeds candidate count {}", election.m())));
        }
        Ok(Instance { election, rule, k, d })
    }

    /// Integer form of the threshold for MAV and CCAV: the largest allowed
    /// MAV score, or the smallest acceptable CCAV score.
    pub fn int_threshold(&self) -> i128 {
        match self.rule {
            Rule::Mav => self.d.floor(),
            Rule::Ccav | Rule::Pav => self.d.ceil(),
        }
    }

    pub fn with_threshold(&self, d: Rational) -> Instance {
        Instance { d, ..self.clone() }
    }

    pub fn with_k(&self, k: usize) -> Result<Instance> {
        Instance::new(self.election.clone(), self.rule, k, self.d)
    }

    pub fn meets(&self, score: Rational) -> bool {
        self.rule.meets(score, self.d)
    }

    /// `lcm(1..=min(k, max vote size))`-based scale: enough for every PAV
    /// score of a `k`-committee.
    pub fn pav_scale(&self) -> HarmonicScale {
        HarmonicScale::new(self.k.min(self.election.max_vote_size()))
    }
}

/// `|v \ w| + |w \ v|` for sorted, duplicate-free slices.
pub fn hamming(v: &[usize], w: &[usize]) -> usize {
    v.len() + w.len() - 2 * intersection_size(v, w)
}

/// Size of the intersection of two sorted, duplicate-free slices.
pub fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Exact score of `w` under `rule`. The MAV score of an election with no
/// votes is 0.
pub fn score(e: &Election, rule: Rule, w: &Committee) -> Rational {
    let w = w.members();
    match rule {
        Rule::Mav => {
            let worst = e.votes().iter().map(|v| hamming(v, w)).max().unwrap_or(0);
            Rational::from(worst)
        }
        Rule::Ccav => {
            let hit = e.votes().iter().filter(|v| intersection_size(v, w) > 0).count();
            Rational::from(hit)
        }
        Rule::Pav => {
            let scale = HarmonicScale::new(w.len().min(e.max_vote_size()));
            scale.to_rational(pav_scaled(e, w, &scale))
        }
    }
}

/// PAV score of `w` multiplied by `scale.denominator()`.
pub fn pav_scaled(e: &Election, w: &[usize], scale: &HarmonicScale) -> i128 {
    e.votes().iter().map(|v| scale.h(intersection_size(v, w))).sum()
}
