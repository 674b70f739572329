//! Normal forms, link equivalence and 4-genus bounds for closures of 3-braids.

pub mod burau;
mod cycling;
pub mod error;
pub mod garside;
pub mod invariants;
pub mod laurent;
pub mod parallel;
pub mod seifert;
pub mod twisting;
pub mod word;
pub mod xu;

pub use burau::{braids_equal, burau_alexander, burau_matrix, BurauMatrix};
pub use error::{Error, ParseError, Result};
pub use garside::{
    garside_normalize, garside_normalize_certified, xu_to_garside, CertifiedGarsideForm, GarsideCase, GarsideForm,
};
pub use invariants::{
    classify_top4genus, defect_and_g4top_bounds, defect_bounds, positivity_class, recognize_special_family,
    recognize_special_family_with, seifert_genus_sqp, signature_from_garside, signature_from_xu, FamilyTag,
    FamilyVariant, G4Report, PositivityClass, Top4GenusClass,
};
pub use laurent::LaurentPoly;
pub use parallel::Execution;
pub use seifert::{
    alexander_polynomial, gambaudo_ghys_deviation, levine_tristram_at, seifert_matrix, sigma_hat_and_profile,
    sigma_hat_and_profile_with, signature_oracle, unit_circle_jumps, SeifertData, SignatureProfile,
};
pub use twisting::{g4top_upper_from_twisting, Certificate, Move, ScriptedFamily, TwistingBound};
pub use word::{parse_braid_word, BraidWord, Generator, Letter, Sign, StrandPermutation, MAX_LETTERS};
pub use xu::{
    canonical_link_form, conjugate_in_b3, is_xu_normal, link_relation, same_closure_link, unknot_forms, xu_normalize,
    xu_normalize_certified, CertifiedXuForm, LinkRelation, XuForm,
};
