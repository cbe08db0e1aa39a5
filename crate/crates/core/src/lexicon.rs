//! Keyword lexicons and exact n-gram matching.
//!
//! Phrases are tokenized with the corpus tokenizer and then canonicalized by
//! dropping stopwords, because matching runs on the stopword-stripped stream.
//! Phrases that collapse onto the same canonical form (`exit the EU`,
//! `exit from the EU`) form a single [`Term`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::corpus::{normalize_text, tokenize, Report, TokenView};
use crate::{stopwords, Error};

/// Uncertainty keywords as printed in the source keyword table.
pub const DEFAULT_UNCERTAINTY: [&str; 19] = [
    "fear",
    "indecision",
    "instability",
    "jittery",
    "nervousness",
    "precarious",
    "tense",
    "tension",
    "uncertain",
    "uncertainly",
    "uncertainty",
    "unclear",
    "unknown",
    "unpredictable",
    "unsettled",
    "unstable",
    "volatile",
    "volatility",
    "worry",
];

/// Brexit-related keywords (event A).
pub const DEFAULT_EVENT_A: [&str; 33] = [
    "article 50",
    "Brexit",
    "Brexit-related",
    "customs union",
    "EU exit",
    "EU membership",
    "EU withdrawal",
    "exit deal",
    "exit from the EU",
    "exit the EU",
    "exit time",
    "exiting",
    "exiting the EU",
    "exiting the European union",
    "free movement",
    "internal market bill",
    "leave the EU",
    "northern Ireland protocol",
    "post-Brexit",
    "pre-Brexit",
    "referendum",
    "regulatory alignment",
    "regulatory framework",
    "single market",
    "trade arrangement",
    "trade negotiations",
    "transition period",
    "UK exits",
    "UK-EU relations",
    "Uk-EU trade deal",
    "UK's withdrawal",
    "withdrawal agreement",
    "withdrawal from the EU",
];

/// COVID-19-related keywords (event B).
pub const DEFAULT_EVENT_B: [&str; 9] = [
    "coronavirus",
    "covid",
    "covid-19",
    "lockdown",
    "outbreak",
    "pandemic",
    "quarantine",
    "vaccination",
    "vaccine",
];

pub const DEFAULT_EXCLUSION_TRIGGER: &str = "referendum";
pub const DEFAULT_EXCLUSION_CONTEXT: [&str; 2] = ["scotland", "scottish"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Uncertainty,
    EventA,
    EventB,
    /// Words that, next to the exclusion trigger, void a window.
    ExclusionContext,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::Uncertainty,
        Category::EventA,
        Category::EventB,
        Category::ExclusionContext,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::Uncertainty => "uncertainty",
            Category::EventA => "event_a",
            Category::EventB => "event_b",
            Category::ExclusionContext => "exclusion_context",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Drops stopwords from a tokenized phrase; a phrase made only of stopwords
/// is returned unchanged.
pub fn canonicalize_phrase<S: AsRef<str>>(phrase: &[S]) -> Vec<String> {
    let kept: Vec<String> = phrase
        .iter()
        .map(AsRef::as_ref)
        .filter(|t| !stopwords::is_stopword(t))
        .map(String::from)
        .collect();
    if kept.is_empty() {
        phrase.iter().map(|t| String::from(t.as_ref())).collect()
    } else {
        kept
    }
}

/// A lexicon entry as written in the configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phrase {
    pub text: String,
    pub tokens: Vec<String>,
    pub canonical: Vec<String>,
}

impl Phrase {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let tokens = tokenize(&normalize_text(text));
        if tokens.is_empty() {
            return Err(Error::EmptyPhrase(String::from(text)));
        }
        let canonical = canonicalize_phrase(&tokens);
        Ok(Phrase {
            text: String::from(text),
            tokens,
            canonical,
        })
    }
}

/// One canonical n-gram and every configured phrase that maps onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub canonical: Vec<String>,
    pub phrases: Vec<String>,
}

impl Term {
    /// The first configured phrase, used as the display label.
    pub fn label(&self) -> &str {
        &self.phrases[0]
    }
}

#[derive(Debug, Clone, Default)]
struct TermSet {
    terms: Vec<Term>,
    index: BTreeMap<Vec<String>, usize>,
    heads: BTreeSet<String>,
    max_len: usize,
}

impl TermSet {
    fn build(phrases: &[Phrase]) -> Self {
        let mut set = TermSet::default();
        for p in phrases {
            match set.index.get(&p.canonical) {
                Some(&id) => set.terms[id].phrases.push(p.text.clone()),
                None => {
                    set.index.insert(p.canonical.clone(), set.terms.len());
                    set.heads.insert(p.canonical[0].clone());
                    set.max_len = set.max_len.max(p.canonical.len());
                    set.terms.push(Term {
                        canonical: p.canonical.clone(),
                        phrases: alloc::vec![p.text.clone()],
                    });
                }
            }
        }
        set
    }

    /// Longest term starting at `start`, as (term id, length).
    fn longest_at(&self, tokens: &[String], start: usize) -> Option<(usize, usize)> {
        if !self.heads.contains(&tokens[start]) {
            return None;
        }
        let longest = self.max_len.min(tokens.len() - start);
        (1..=longest)
            .rev()
            .find_map(|len| self.index.get(&tokens[start..start + len]).map(|&id| (id, len)))
    }
}

/// The three keyword categories plus the exclusion rule.
#[derive(Debug, Clone)]
pub struct Lexicon {
    phrases: [Vec<Phrase>; 4],
    sets: [TermSet; 4],
    exclusion_trigger: Phrase,
}

impl Lexicon {
    /// Builds a lexicon from raw phrase text, validating it.
    pub fn new<S: AsRef<str>>(
        uncertainty: &[S],
        event_a: &[S],
        event_b: &[S],
        exclusion_trigger: &str,
        exclusion_context: &[S],
    ) -> Result<Self, Error> {
        let parse_all = |items: &[S]| -> Result<Vec<Phrase>, Error> {
            items.iter().map(|s| Phrase::parse(s.as_ref())).collect()
        };
        let phrases = [
            parse_all(uncertainty)?,
            parse_all(event_a)?,
            parse_all(event_b)?,
            parse_all(exclusion_context)?,
        ];
        let mut owner: BTreeMap<&[String], Category> = BTreeMap::new();
        for cat in [Category::Uncertainty, Category::EventA, Category::EventB] {
            let list = &phrases[cat.slot()];
            if list.is_empty() {
                return Err(Error::EmptyCategory(cat.name()));
            }
            for p in list {
                match owner.get(p.canonical.as_slice()) {
                    Some(&other) if other != cat => {
                        return Err(Error::CrossCategoryPhrase {
                            phrase: p.text.clone(),
                            first: other.name(),
                            second: cat.name(),
                        })
                    }
                    _ => {
                        owner.insert(&p.canonical, cat);
                    }
                }
            }
        }
        let sets = [
            TermSet::build(&phrases[0]),
            TermSet::build(&phrases[1]),
            TermSet::build(&phrases[2]),
            TermSet::build(&phrases[3]),
        ];
        Ok(Lexicon {
            exclusion_trigger: Phrase::parse(exclusion_trigger)?,
            phrases,
            sets,
        })
    }

    /// The bundled keyword table.
    pub fn standard() -> Self {
        Lexicon::new(
            &DEFAULT_UNCERTAINTY,
            &DEFAULT_EVENT_A,
            &DEFAULT_EVENT_B,
            DEFAULT_EXCLUSION_TRIGGER,
            &DEFAULT_EXCLUSION_CONTEXT,
        )
        .expect("bundled lexicon is valid")
    }

    /// Configured phrases of a category, in configuration order.
    pub fn phrases(&self, category: Category) -> &[Phrase] {
        &self.phrases[category.slot()]
    }

    /// Distinct canonical terms of a category.
    pub fn terms(&self, category: Category) -> &[Term] {
        &self.sets[category.slot()].terms
    }

    pub fn term(&self, category: Category, id: usize) -> &Term {
        &self.sets[category.slot()].terms[id]
    }

    pub fn exclusion_trigger(&self) -> &Phrase {
        &self.exclusion_trigger
    }
}

/// One lexicon hit in a stopword-stripped token stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Match {
    pub position: usize,
    pub category: Category,
    /// Canonical n-gram length in tokens.
    pub length: usize,
    /// Index into [`Lexicon::terms`] for `category`.
    pub term: usize,
}

impl Match {
    pub fn phrase<'a>(&self, lexicon: &'a Lexicon) -> &'a str {
        lexicon.term(self.category, self.term).label()
    }

    pub fn end(&self) -> usize {
        self.position + self.length
    }
}

/// Every exact occurrence of a canonical lexicon term in `view`.
///
/// At each start position only the longest term per category is reported;
/// different categories may overlap. The result is sorted by position, then
/// category.
pub fn match_ngrams(view: &TokenView, lexicon: &Lexicon) -> Vec<Match> {
    let tokens = &view.tokens;
    let mut out = Vec::new();
    for start in 0..tokens.len() {
        for category in Category::ALL {
            if let Some((term, length)) = lexicon.sets[category.slot()].longest_at(tokens, start) {
                out.push(Match {
                    position: start,
                    category,
                    length,
                    term,
                });
            }
        }
    }
    out
}

/// Corpus-wide hit count of one canonical term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeywordCount {
    pub category: Category,
    pub term: usize,
    /// Display label (first configured phrase).
    pub phrase: String,
    /// Every configured phrase folded into this term.
    pub phrases: Vec<String>,
    pub count: u64,
}

impl KeywordCount {
    /// Terms that never occur are candidates for pruning.
    pub fn is_absent(&self) -> bool {
        self.count == 0
    }
}

/// Total matches per term across the corpus, for the three keyword
/// categories, in lexicon order.
pub fn keyword_frequency(corpus: &[Report], lexicon: &Lexicon) -> Vec<KeywordCount> {
    let categories = [Category::Uncertainty, Category::EventA, Category::EventB];
    let mut counts: [Vec<u64>; 3] = categories.map(|c| alloc::vec![0u64; lexicon.terms(c).len()]);
    for report in corpus {
        for m in match_ngrams(&report.content_view(), lexicon) {
            if m.category != Category::ExclusionContext {
                counts[m.category.slot()][m.term] += 1;
            }
        }
    }
    categories
        .iter()
        .flat_map(|&c| {
            let counts = &counts[c.slot()];
            lexicon
                .terms(c)
                .iter()
                .enumerate()
                .map(move |(id, t)| KeywordCount {
                    category: c,
                    term: id,
                    phrase: String::from(t.label()),
                    phrases: t.phrases.clone(),
                    count: counts[id],
                })
        })
        .collect()
}
