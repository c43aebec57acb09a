pub mod constructions;
pub mod enumerate;
pub mod io;
pub mod knot_graph;
pub mod medial;
pub mod planar_map;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/planar_maps.md")]
    mod planar_maps {}
    #[doc = include_str!("../../../book/src/knot_shadows.md")]
    mod knot_shadows {}
    #[doc = include_str!("../../../book/src/medial.md")]
    mod medial {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/acceptance.md")]
    mod acceptance {}
}
