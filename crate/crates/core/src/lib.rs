//! Exact pattern matching on indeterminate strings.
//!
//! Letters are nonempty subsets of an alphabet of at most nine characters.
//! Each letter is encoded as a product of distinct primes, so two letters
//! match iff the gcd of their encodings exceeds 1. On top of that encoding
//! the crate provides a brute-force searcher, classic KMP and Boyer–Moore
//! for regular strings, and their indeterminate counterparts.
//!
//! The encoding is generic over the machine word carrying a letter; the
//! aliases below fix the common choices.
//!
//! ```
//! use indet_core::{parse_bracket, Alphabet, Algorithm, Text};
//!
//! let abc = Alphabet::new("abc").unwrap();
//! let text: Text = parse_bracket("aabaabaa[ab]baa[ac]", &abc).unwrap().to_encoded().unwrap();
//! let pattern: Text = parse_bracket("aabaa", &abc).unwrap().to_encoded().unwrap();
//! let out = Algorithm::KmpIndet.run(&text, &pattern).unwrap();
//! assert_eq!(out.matches.positions(), &[1, 4, 8]);
//! ```

pub mod arrays;
pub mod benchgen;
pub mod encoding;
pub mod error;
pub mod matchers;
pub mod textio;
pub mod word;

pub use arrays::{
    border_array_regular, longest_regular_prefix_len, longest_regular_suffix_len,
    prefix_array_indet, BorderArray, PrefixArray,
};
pub use benchgen::{generate, run_benchmark, BenchRecord, GenSpec, CSV_HEADER};
pub use encoding::{
    compare_letters, is_indet, letters_match, Alphabet, EncodedLetter, EncodedString, MAX_PRODUCT,
    MAX_SIGMA, PRIMES,
};
pub use error::{Error, Result};
pub use matchers::{
    bad_char_shift, bf_search, bm_indet_search, bm_search_regular, build_bad_char_table,
    compute_shift, indet_gsr_shift, kmp_indet_search, kmp_search_regular, Algorithm, BadCharTable,
    MatchList, SearchOptions, SearchOutcome,
};
pub use textio::{parse_bracket, parse_iupac, SymbolicString};
pub use word::Word;

/// A letter in a 32-bit word; holds every supported alphabet.
pub type Letter = EncodedLetter<u32>;
/// A string of 32-bit letters.
pub type Text = EncodedString<u32>;
/// A DNA letter in one byte (`2·3·5·7 = 210 < 256`).
pub type DnaLetter = EncodedLetter<u8>;
/// A DNA string of one-byte letters.
pub type DnaText = EncodedString<u8>;
