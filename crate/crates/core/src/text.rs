//! String normalization and collation helpers.

use alloc::string::String;
use core::cmp::Ordering;

use unicode_normalization::{is_nfc, UnicodeNormalization};

/// Unicode NFC form of `s`.
pub fn nfc(s: &str) -> String {
    if is_nfc(s) {
        String::from(s)
    } else {
        s.nfc().collect()
    }
}

/// Full lowercase mapping, used as the case fold.
pub fn fold_case(s: &str) -> String {
    s.chars().flat_map(char::to_lowercase).collect()
}

/// Trim and collapse every run of whitespace to a single space.
pub fn collapse_whitespace(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for word in s.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

/// Normal form under which two canonical spellings count as the same
/// identity: NFC, case fold, trim, whitespace collapse. Diacritics are kept.
pub fn unicity_form(s: &str) -> String {
    collapse_whitespace(&fold_case(&nfc(s)))
}

/// Case-insensitive code-point comparison with a case-sensitive tie break.
pub fn collate(a: &str, b: &str) -> Ordering {
    let folded = a
        .chars()
        .flat_map(char::to_lowercase)
        .cmp(b.chars().flat_map(char::to_lowercase));
    folded.then_with(|| a.cmp(b))
}
