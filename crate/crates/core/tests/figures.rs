use grouplabel_core::constructions::figures::{figure, figure1, figure2, figure3, figure4};
use grouplabel_core::constructions::{construct_ant_path, project_labeling};
use grouplabel_core::labeling::{
    induce_vertex_labels, verify_a_antimagic, verify_a_star_antimagic, verify_ea_cordial,
};
use grouplabel_core::*;

#[test]
fn figure1_tree_is_star_antimagic() {
    let fig = figure1();
    assert_eq!(fig.graph.n(), 8);
    assert!(fig.graph.is_tree());
    assert!(fig.labeling.labels.iter().all(|a| !a.is_zero()));
    assert!(verify_a_star_antimagic(&fig.graph, &fig.labeling).is_ok());
}

#[test]
fn figures_2_and_3_are_the_block_construction() {
    for (fig, spec) in [(figure2(), GroupSpec::new(vec![8, 3]).unwrap()), (figure3(), GroupSpec::cyclic(24))] {
        assert!(verify_ea_cordial(&fig.graph, &fig.labeling).is_ok());
        assert!(verify_a_antimagic(&fig.graph, &fig.labeling).is_ok());
        assert_eq!(construct_ant_path(&spec).unwrap(), fig.labeling);
    }
}

#[test]
fn figure2_vertex_sums_are_distinct() {
    let fig = figure2();
    let mut sums = induce_vertex_labels(&fig.graph, &fig.labeling).unwrap().labels;
    sums.sort();
    sums.dedup();
    assert_eq!(sums.len(), 24);
}

#[test]
fn figure4_path_and_projections() {
    let fig = figure4();
    assert!(verify_a_antimagic(&fig.graph, &fig.labeling).is_ok());
    let p = project_labeling(&fig.graph, &fig.labeling, &[0, 1]).unwrap();
    assert_eq!(p.group, GroupSpec::elementary_two(2));
    assert!(verify_ea_cordial(&fig.graph, &p).is_ok());
    let z8 = project_labeling(&figure2().graph, &figure2().labeling, &[0]).unwrap();
    assert!(verify_ea_cordial(&figure2().graph, &z8).is_ok());
}

#[test]
fn lookup_by_number() {
    for n in 1..=4 {
        assert_eq!(figure(n).unwrap().number, n);
    }
    assert!(figure(5).is_none());
}
