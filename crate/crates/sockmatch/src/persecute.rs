//! Left-to-right persecution of word families.
//!
//! Scan the letters of a word one by one. Whenever the surviving scanned
//! prefix contains a scattered copy of some family member (a subsequence
//! with the same letter-equality pattern, letters matched bijectively),
//! delete the copy with the lexicographically smallest index tuple, ties
//! between family members going to the earlier member. Deletions repeat
//! until no copy remains, then the scan advances. The survivor counts per
//! prefix generalize the sockuence: persecuting `{AA}` on a Gauss word
//! replays the sock process exactly.

use crate::error::{Error, Result};
use crate::word::Word;

/// One deletion event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Removal {
    /// 1-based position of the scan head when the deletion fired.
    pub trigger: usize,
    /// Index into the family of the member whose copy was deleted.
    pub family_index: usize,
    /// 1-based positions (in the input word) of the deleted letters.
    pub removed_positions: Vec<usize>,
}

/// Full transcript of a persecution run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersecutionRun {
    pub input: Word,
    pub family: Vec<Word>,
    /// Surviving-prefix length after each scanned position, once all
    /// deletions at that position have fired.
    pub survivor_lengths: Vec<usize>,
    pub removals: Vec<Removal>,
    /// The surviving word, with its original letter identities.
    pub result: Word,
}

impl PersecutionRun {
    /// `max_i |U_i / J|`: the largest surviving-prefix length seen.
    pub fn y(&self) -> usize {
        self.survivor_lengths.iter().copied().max().unwrap_or(0)
    }
}

/// Run the persecution of `family` on `u`.
pub fn reduce(u: &Word, family: &[Word]) -> Result<PersecutionRun> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for member in family {
        if member.is_empty() {
            return Err(Error::MalformedWord(
                "family members must be nonempty".into(),
            ));
        }
    }
    let members: Vec<Vec<u32>> = family
        .iter()
        .map(|m| m.canonical().letters().to_vec())
        .collect();

    let letters = u.letters();
    let mut survivors: Vec<usize> = Vec::with_capacity(letters.len());
    let mut survivor_lengths = Vec::with_capacity(letters.len());
    let mut removals = Vec::new();

    for i in 0..letters.len() {
        survivors.push(i);
        // Every complete copy must involve the letter that just arrived:
        // earlier copies were already deleted, and deletions cannot create
        // subsequences. Anchoring the first search there keeps it cheap.
        if let Some((family_index, tuple)) =
            smallest_copy(letters, &survivors, &members, Some(survivors.len() - 1))
        {
            delete(&mut survivors, &tuple, i + 1, family_index, &mut removals);
            // Sweep again without the anchor until nothing is left.
            while let Some((family_index, tuple)) =
                smallest_copy(letters, &survivors, &members, None)
            {
                delete(&mut survivors, &tuple, i + 1, family_index, &mut removals);
            }
        }
        survivor_lengths.push(survivors.len());
    }

    let result = Word::new(survivors.iter().map(|&i| letters[i]).collect());
    Ok(PersecutionRun {
        input: u.clone(),
        family: family.to_vec(),
        survivor_lengths,
        removals,
        result,
    })
}

/// The statistic `y_J(U)` alone.
pub fn y_stat(u: &Word, family: &[Word]) -> Result<usize> {
    Ok(reduce(u, family)?.y())
}

fn delete(
    survivors: &mut Vec<usize>,
    tuple: &[usize],
    trigger: usize,
    family_index: usize,
    removals: &mut Vec<Removal>,
) {
    let removed_positions: Vec<usize> = tuple.iter().map(|&s| survivors[s] + 1).collect();
    for &s in tuple.iter().rev() {
        survivors.remove(s);
    }
    removals.push(Removal {
        trigger,
        family_index,
        removed_positions,
    });
}

/// Lexicographically smallest index tuple (into `survivors`) forming a
/// copy of any member; ties between members go to the earlier one. With
/// `anchor` set, only tuples ending at that survivor index are considered.
fn smallest_copy(
    letters: &[u32],
    survivors: &[usize],
    members: &[Vec<u32>],
    anchor: Option<usize>,
) -> Option<(usize, Vec<usize>)> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (mi, member) in members.iter().enumerate() {
        if !feasible(letters, survivors, member) {
            continue;
        }
        let mut state = MatchState {
            letters,
            survivors,
            member,
            anchor,
            map: vec![None; member.iter().max().map_or(0, |&m| m as usize + 1)],
            used: Vec::new(),
            tuple: Vec::new(),
        };
        if let Some(tuple) = state.search(0, 0) {
            let better = match &best {
                None => true,
                Some((_, t)) => tuple < *t,
            };
            if better {
                best = Some((mi, tuple));
            }
        }
    }
    best
}

/// Cheap necessary condition: the sorted letter multiplicities of the
/// member must fit under those of the surviving prefix.
fn feasible(letters: &[u32], survivors: &[usize], member: &[u32]) -> bool {
    if member.len() > survivors.len() {
        return false;
    }
    let mut member_counts = std::collections::HashMap::new();
    for &l in member {
        *member_counts.entry(l).or_insert(0usize) += 1;
    }
    let mut survivor_counts = std::collections::HashMap::new();
    for &s in survivors {
        *survivor_counts.entry(letters[s]).or_insert(0usize) += 1;
    }
    let mut need: Vec<usize> = member_counts.into_values().collect();
    let mut have: Vec<usize> = survivor_counts.into_values().collect();
    need.sort_unstable_by(|a, b| b.cmp(a));
    have.sort_unstable_by(|a, b| b.cmp(a));
    need.len() <= have.len() && need.iter().zip(&have).all(|(n, h)| n <= h)
}

struct MatchState<'a> {
    letters: &'a [u32],
    survivors: &'a [usize],
    member: &'a [u32],
    anchor: Option<usize>,
    /// member letter -> matched input letter (members are canonical, so
    /// letters index densely from 0)
    map: Vec<Option<u32>>,
    /// input letters already claimed, for bijectivity
    used: Vec<u32>,
    tuple: Vec<usize>,
}

impl MatchState<'_> {
    /// Depth-first over survivor indices in increasing order; the first
    /// complete match is the lexicographically smallest tuple.
    fn search(&mut self, slot: usize, from: usize) -> Option<Vec<usize>> {
        if slot == self.member.len() {
            return Some(self.tuple.clone());
        }
        let last_slot = slot + 1 == self.member.len();
        let upper = match self.anchor {
            Some(a) if last_slot => a + 1,
            Some(a) => a,
            None => self.survivors.len(),
        };
        let lower = match self.anchor {
            Some(a) if last_slot => a,
            _ => from,
        };
        // Remaining slots need enough room on the right.
        let slack = self.member.len() - slot - 1;
        for pos in lower..upper {
            if pos + slack >= self.survivors.len() {
                break;
            }
            if !self.try_assign(slot, pos) {
                continue;
            }
            if let Some(t) = self.search(slot + 1, pos + 1) {
                return Some(t);
            }
            self.unassign(slot);
        }
        None
    }

    fn try_assign(&mut self, slot: usize, pos: usize) -> bool {
        let want = self.member[slot] as usize;
        let have = self.letters[self.survivors[pos]];
        match self.map[want] {
            Some(mapped) if mapped != have => return false,
            Some(_) => {}
            None => {
                if self.used.contains(&have) {
                    return false;
                }
                self.map[want] = Some(have);
                self.used.push(have);
            }
        }
        self.tuple.push(pos);
        true
    }

    fn unassign(&mut self, slot: usize) {
        self.tuple.pop();
        let want = self.member[slot] as usize;
        // Drop the mapping only if this slot introduced it.
        let introduced = !self.member[..slot].contains(&self.member[slot]);
        if introduced {
            let had = self.map[want].take().expect("mapping present");
            let at = self
                .used
                .iter()
                .position(|&u| u == had)
                .expect("used entry");
            self.used.remove(at);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordio::{parse_word, WordFormat};

    fn word(text: &str) -> Word {
        parse_word(text, WordFormat::CompactLetters).unwrap()
    }

    #[test]
    fn worked_example() {
        let run = reduce(&word("ABCADBCDA"), &[word("ABA")]).unwrap();
        assert_eq!(run.result, word("BDA"));
        assert_eq!(run.result.to_string(), "BDA");
        assert_eq!(run.y(), 3);
        assert_eq!(run.survivor_lengths, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert_eq!(
            run.removals,
            vec![
                Removal {
                    trigger: 4,
                    family_index: 0,
                    removed_positions: vec![1, 2, 4],
                },
                Removal {
                    trigger: 7,
                    family_index: 0,
                    removed_positions: vec![3, 5, 7],
                },
            ]
        );
    }

    #[test]
    fn untouched_words_survive() {
        let run = reduce(&word("ABC"), &[word("AA")]).unwrap();
        assert_eq!(run.result, word("ABC"));
        assert_eq!(run.y(), 3);
        assert!(run.removals.is_empty());
    }

    #[test]
    fn single_letter_family_erases_everything() {
        let run = reduce(&word("ABCA"), &[word("A")]).unwrap();
        assert_eq!(run.survivor_lengths, vec![0, 0, 0, 0]);
        assert_eq!(run.y(), 0);
        assert!(run.result.is_empty());
    }

    #[test]
    fn pair_family_replays_the_sock_process() {
        for text in ["ABBCAC", "ABCBAC", "ABCCDBDA"] {
            let u = word(text);
            let run = reduce(&u, &[word("AA")]).unwrap();
            let m = crate::word::GaussWord::parse(text).unwrap().to_matching();
            let s = crate::sockproc::sockuence(&m);
            assert_eq!(run.survivor_lengths, s.xs, "{text}");
            assert_eq!(run.y(), s.y, "{text}");
        }
    }

    #[test]
    fn copies_match_bijectively() {
        // AAB contains no copy of ABA (the two As are not an A..B pair)
        let run = reduce(&word("AAB"), &[word("ABA")]).unwrap();
        assert_eq!(run.result.to_string(), "AAB");
        // AABA completes two copies at the final letter; (1,3,4) is the
        // smaller tuple
        let run = reduce(&word("AABA"), &[word("ABA")]).unwrap();
        assert_eq!(
            run.removals[0].removed_positions,
            vec![1, 3, 4],
            "smallest tuple wins"
        );
        assert_eq!(run.result.to_string(), "A");
    }

    #[test]
    fn family_order_breaks_ties() {
        // Both members describe the same xx shape; the earlier one is
        // reported.
        let run = reduce(&word("CC"), &[word("AA"), word("BB")]).unwrap();
        assert_eq!(run.removals[0].family_index, 0);
    }

    #[test]
    fn empty_family_is_rejected() {
        assert!(matches!(reduce(&word("A"), &[]), Err(Error::EmptyFamily)));
        assert!(reduce(&word("A"), &[Word::new(vec![])]).is_err());
    }

    #[test]
    fn prefix_consistency() {
        let u = word("ABACBDCADCBD");
        let family = [word("ABA"), word("AA")];
        let full = reduce(&u, &family).unwrap();
        for i in 1..=u.len() {
            let partial = reduce(&u.prefix(i), &family).unwrap();
            assert_eq!(
                partial.survivor_lengths,
                full.survivor_lengths[..i],
                "prefix {i}"
            );
        }
    }
}
