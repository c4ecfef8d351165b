//! Bounded enumeration of well-formed active trees.
//!
//! The space is indexed: every tree has a position, so iteration can skip
//! ahead cheaply (`nth`, `step_by`). The frame (tense or modal, polarity)
//! varies fastest, then the sentence-level PP, the object, the verb and
//! finally the subject, so any window of consecutive trees covers every
//! frame.

use crate::lexicon::{active_verb_form, aux_chain, do_support_aux, Lexicon, VerbEntry, VerbForm};
use crate::syntax::{ActiveTree, Agreement, NounPhrase, Polarity, PrepPhrase, Role, Tense};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub max_adjectives: usize,
    /// Maximum PP nesting. Zero disables PPs entirely, including the
    /// sentence-level one.
    pub max_pp_depth: usize,
    pub tenses: Vec<Tense>,
    pub polarities: Vec<Polarity>,
    pub include_modals: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_adjectives: 1,
            max_pp_depth: 0,
            tenses: Tense::ALL.to_vec(),
            polarities: Polarity::ALL.to_vec(),
            include_modals: true,
        }
    }
}

#[derive(Debug, Clone)]
struct Frame {
    tense: Tense,
    polarity: Polarity,
    modal: Option<String>,
}

/// The indexed space of active trees within some [`Bounds`].
#[derive(Debug, Clone)]
pub struct TreeSpace<'l> {
    subjects: Vec<(NounPhrase, Agreement)>,
    objects: Vec<NounPhrase>,
    preps: Vec<String>,
    verbs: Vec<&'l VerbEntry>,
    frames: Vec<Frame>,
    depth: usize,
    /// np_counts[d]: number of noun phrases with PP nesting at most d
    np_counts: Vec<u128>,
}

fn adjective_sequences(adjectives: &[&str], max: usize) -> Vec<Vec<String>> {
    let mut all = vec![Vec::new()];
    let mut layer: Vec<Vec<String>> = vec![Vec::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|seq| {
                adjectives.iter().map(move |a| {
                    let mut next = seq.clone();
                    next.push((*a).to_owned());
                    next
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn base_noun_phrases(
    lexicon: &Lexicon,
    role: Role,
    max_adjectives: usize,
) -> Vec<(NounPhrase, Agreement)> {
    let mut out: Vec<(NounPhrase, Agreement)> = lexicon
        .pronouns()
        .map(|p| (NounPhrase::pro(p.form(role)), p.agreement))
        .collect();
    let adjectives: Vec<&str> = lexicon.adjectives().collect();
    let sequences = adjective_sequences(&adjectives, max_adjectives);
    let dets: Vec<Option<&str>> = lexicon.determiners().map(Some).chain([None]).collect();
    for noun in lexicon.nouns() {
        for det in &dets {
            for adjs in &sequences {
                out.push((
                    NounPhrase::Full {
                        det: det.map(str::to_owned),
                        adjectives: adjs.clone(),
                        noun: noun.surface.clone(),
                        pp: None,
                    },
                    noun.agreement,
                ));
            }
        }
    }
    out
}

impl<'l> TreeSpace<'l> {
    pub fn new(lexicon: &'l Lexicon, bounds: &Bounds) -> Self {
        let subjects = base_noun_phrases(lexicon, Role::Subject, bounds.max_adjectives);
        let objects: Vec<NounPhrase> =
            base_noun_phrases(lexicon, Role::Object, bounds.max_adjectives)
                .into_iter()
                .map(|(np, _)| np)
                .collect();
        let preps: Vec<String> = lexicon.prepositions().map(str::to_owned).collect();

        let mut frames = Vec::new();
        for &tense in &bounds.tenses {
            for &polarity in &bounds.polarities {
                frames.push(Frame {
                    tense,
                    polarity,
                    modal: None,
                });
            }
        }
        if bounds.include_modals {
            for modal in lexicon.modals() {
                for &polarity in &bounds.polarities {
                    frames.push(Frame {
                        tense: Tense::SimplePresent,
                        polarity,
                        modal: Some(modal.to_owned()),
                    });
                }
            }
        }

        let base = subjects.len() as u128;
        let prep_count = preps.len() as u128;
        let mut np_counts = vec![base];
        for d in 1..=bounds.max_pp_depth {
            let inner = np_counts[d - 1];
            np_counts.push(base.saturating_mul(prep_count.saturating_mul(inner).saturating_add(1)));
        }

        TreeSpace {
            subjects,
            objects,
            preps,
            verbs: lexicon.verbs().collect(),
            frames,
            depth: bounds.max_pp_depth,
            np_counts,
        }
    }

    fn final_pp_count(&self) -> u128 {
        if self.depth == 0 {
            1
        } else {
            (self.preps.len() as u128)
                .saturating_mul(self.np_counts[self.depth - 1])
                .saturating_add(1)
        }
    }

    /// Number of trees in the space (saturating).
    pub fn len(&self) -> u128 {
        let nps = self.np_counts[self.depth];
        nps.saturating_mul(self.verbs.len() as u128)
            .saturating_mul(nps)
            .saturating_mul(self.final_pp_count())
            .saturating_mul(self.frames.len() as u128)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn object_np(&self, depth: usize, index: u128) -> NounPhrase {
        self.np_at(depth, index, &|i| self.objects[i].clone()).0
    }

    fn subject_np(&self, index: u128) -> (NounPhrase, Agreement) {
        let (np, base_idx) = self.np_at(self.depth, index, &|i| self.subjects[i].0.clone());
        (np, self.subjects[base_idx].1)
    }

    /// The noun phrase at `index` and the position of its head in the base list.
    fn np_at(
        &self,
        depth: usize,
        index: u128,
        base_np: &dyn Fn(usize) -> NounPhrase,
    ) -> (NounPhrase, usize) {
        let base = self.subjects.len() as u128;
        if index < base {
            return (base_np(index as usize), index as usize);
        }
        let inner = self.np_counts[depth - 1];
        let per_base = self.preps.len() as u128 * inner;
        let j = index - base;
        let (b, r) = (j / per_base, j % per_base);
        let (p, k) = (r / inner, r % inner);
        let np = base_np(b as usize).with_pp(PrepPhrase::new(
            self.preps[p as usize].clone(),
            self.object_np(depth - 1, k),
        ));
        (np, b as usize)
    }

    fn final_pp(&self, index: u128) -> Option<PrepPhrase> {
        if index == 0 {
            return None;
        }
        let inner = self.np_counts[self.depth - 1];
        let j = index - 1;
        Some(PrepPhrase::new(
            self.preps[(j / inner) as usize].clone(),
            self.object_np(self.depth - 1, j % inner),
        ))
    }

    /// The tree at `index` (which must be below [`TreeSpace::len`]) with its tense.
    pub fn get(&self, index: u128) -> (ActiveTree, Tense) {
        let mut i = index;
        let mut take = |n: u128| {
            let digit = i % n;
            i /= n;
            digit
        };
        let frame = &self.frames[take(self.frames.len() as u128) as usize];
        let final_idx = take(self.final_pp_count());
        let nps = self.np_counts[self.depth];
        let object_idx = take(nps);
        let verb = self.verbs[take(self.verbs.len() as u128) as usize];
        let subject_idx = i;

        let (subject, agr) = self.subject_np(subject_idx);
        let negative = frame.polarity.is_negative();
        let (aux, form): (Vec<&str>, VerbForm) = if frame.modal.is_some() {
            (Vec::new(), VerbForm::Base)
        } else if frame.tense.group() == 1 && negative {
            (
                vec![do_support_aux(frame.tense, agr).expect("simple tense")],
                VerbForm::Base,
            )
        } else {
            (
                aux_chain(frame.tense, agr),
                active_verb_form(frame.tense, agr),
            )
        };
        let tree = ActiveTree {
            subject,
            modal: frame.modal.clone(),
            aux: aux.into_iter().map(str::to_owned).collect(),
            polarity: frame.polarity,
            verb: verb.form(form).to_owned(),
            object: self.object_np(self.depth, object_idx),
            final_pp: self.final_pp(final_idx),
        };
        (tree, frame.tense)
    }

    pub fn iter(&self) -> TreeIter<'_, 'l> {
        TreeIter {
            space: self,
            next: 0,
            end: self.len(),
        }
    }
}

pub struct TreeIter<'s, 'l> {
    space: &'s TreeSpace<'l>,
    next: u128,
    end: u128,
}

impl Iterator for TreeIter<'_, '_> {
    type Item = (ActiveTree, Tense);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let item = self.space.get(self.next);
        self.next += 1;
        Some(item)
    }

    fn nth(&mut self, n: usize) -> Option<Self::Item> {
        self.next = self.next.saturating_add(n as u128);
        self.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end.saturating_sub(self.next);
        match usize::try_from(left) {
            Ok(n) => (n, Some(n)),
            Err(_) => (usize::MAX, None),
        }
    }
}
