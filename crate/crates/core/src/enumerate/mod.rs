//! Exhaustive classification of representations over small finite fields and
//! the theorem checks built on it.

mod catalog;
mod orbits;
mod verify;

pub use catalog::{
    gl_generators, rank_count, Catalog, CatalogFile, ClassEntry, ClassInfo, EnumConfig, DEFAULT_STATE_CAP,
};
pub use orbits::{ii_classes, species_count, CatalogCache, IiSummary, SpeciesSetup, TwistOrbit};
pub use verify::{
    multiset_crosscheck, verify_kac, verify_main_theorem, verify_species_theorem, KacEntry, KacReport, MainEntry,
    MainReport, MultisetEntry, MultisetReport, SpeciesEntry, SpeciesReport,
};

/// Indecomposable classes of one dimension vector.
pub fn indecomposable_classes(catalog: &Catalog) -> Vec<&ClassInfo> {
    catalog.classes.iter().filter(|c| c.indecomposable).collect()
}
