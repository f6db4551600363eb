// Generated registry of the bundled data files. Regenerate by hand if the
// data directory changes; entries are in published table row order.

pub(crate) static PROPERTIES_CSV: &str = include_str!("../../data/properties.csv");
pub(crate) static REFERENCE_CSV: &str = include_str!("../../data/reference.csv");

pub(crate) static BUNDLED_GRAPHS: &[(&str, &str)] = &[
    ("ethane", include_str!("../../data/graphs/ethane.graph")),
    ("propane", include_str!("../../data/graphs/propane.graph")),
    ("butane", include_str!("../../data/graphs/butane.graph")),
    ("pentane", include_str!("../../data/graphs/pentane.graph")),
    ("hexane", include_str!("../../data/graphs/hexane.graph")),
    ("heptane", include_str!("../../data/graphs/heptane.graph")),
    ("octane", include_str!("../../data/graphs/octane.graph")),
    ("nonane", include_str!("../../data/graphs/nonane.graph")),
    ("decane", include_str!("../../data/graphs/decane.graph")),
    ("undecane", include_str!("../../data/graphs/undecane.graph")),
    ("dodecane", include_str!("../../data/graphs/dodecane.graph")),
    (
        "tridecane",
        include_str!("../../data/graphs/tridecane.graph"),
    ),
    (
        "tetradecane",
        include_str!("../../data/graphs/tetradecane.graph"),
    ),
    (
        "pentadecane",
        include_str!("../../data/graphs/pentadecane.graph"),
    ),
    (
        "hexadecane",
        include_str!("../../data/graphs/hexadecane.graph"),
    ),
    (
        "heptadecane",
        include_str!("../../data/graphs/heptadecane.graph"),
    ),
    (
        "octadecane",
        include_str!("../../data/graphs/octadecane.graph"),
    ),
    (
        "nonadecane",
        include_str!("../../data/graphs/nonadecane.graph"),
    ),
    ("icosane", include_str!("../../data/graphs/icosane.graph")),
    (
        "henicosane",
        include_str!("../../data/graphs/henicosane.graph"),
    ),
    ("docosane", include_str!("../../data/graphs/docosane.graph")),
    (
        "tricosane",
        include_str!("../../data/graphs/tricosane.graph"),
    ),
    (
        "tetracosane",
        include_str!("../../data/graphs/tetracosane.graph"),
    ),
    (
        "pentacosane",
        include_str!("../../data/graphs/pentacosane.graph"),
    ),
    (
        "hexacosane",
        include_str!("../../data/graphs/hexacosane.graph"),
    ),
    (
        "heptacosane",
        include_str!("../../data/graphs/heptacosane.graph"),
    ),
    (
        "octacosane",
        include_str!("../../data/graphs/octacosane.graph"),
    ),
    (
        "nonacosane",
        include_str!("../../data/graphs/nonacosane.graph"),
    ),
    (
        "triacontane",
        include_str!("../../data/graphs/triacontane.graph"),
    ),
    (
        "hentriacontane",
        include_str!("../../data/graphs/hentriacontane.graph"),
    ),
    (
        "dotriacontane",
        include_str!("../../data/graphs/dotriacontane.graph"),
    ),
    (
        "1-methylnaphthalene",
        include_str!("../../data/graphs/1-methylnaphthalene.graph"),
    ),
    (
        "2-methylnaphthalene",
        include_str!("../../data/graphs/2-methylnaphthalene.graph"),
    ),
    (
        "1-ethylnaphthalene",
        include_str!("../../data/graphs/1-ethylnaphthalene.graph"),
    ),
    (
        "2-ethylnaphthalene",
        include_str!("../../data/graphs/2-ethylnaphthalene.graph"),
    ),
    (
        "2-6-dimethylnaphthalene",
        include_str!("../../data/graphs/2-6-dimethylnaphthalene.graph"),
    ),
    (
        "2-7-dimethylnaphthalene",
        include_str!("../../data/graphs/2-7-dimethylnaphthalene.graph"),
    ),
    (
        "1-7-dimethylnaphthalene",
        include_str!("../../data/graphs/1-7-dimethylnaphthalene.graph"),
    ),
    (
        "1-5-dimethylnaphthalene",
        include_str!("../../data/graphs/1-5-dimethylnaphthalene.graph"),
    ),
    (
        "1-2-dimethylnaphthalene",
        include_str!("../../data/graphs/1-2-dimethylnaphthalene.graph"),
    ),
    (
        "2-3-5-trimethylnaphthalene",
        include_str!("../../data/graphs/2-3-5-trimethylnaphthalene.graph"),
    ),
    (
        "anthracene",
        include_str!("../../data/graphs/anthracene.graph"),
    ),
    (
        "1-methylanthracene",
        include_str!("../../data/graphs/1-methylanthracene.graph"),
    ),
    (
        "2-7-dimethylanthracene",
        include_str!("../../data/graphs/2-7-dimethylanthracene.graph"),
    ),
    (
        "9-10-dimethylanthracene",
        include_str!("../../data/graphs/9-10-dimethylanthracene.graph"),
    ),
    (
        "phenanthrene",
        include_str!("../../data/graphs/phenanthrene.graph"),
    ),
    (
        "3-6-dimethylphenanthrene",
        include_str!("../../data/graphs/3-6-dimethylphenanthrene.graph"),
    ),
    (
        "naphtalene",
        include_str!("../../data/graphs/naphtalene.graph"),
    ),
    (
        "1-3-7-trimethylnaphthalene",
        include_str!("../../data/graphs/1-3-7-trimethylnaphthalene.graph"),
    ),
    (
        "2-6-dimethylanthracene",
        include_str!("../../data/graphs/2-6-dimethylanthracene.graph"),
    ),
    (
        "4-5-methylenephenanthrene",
        include_str!("../../data/graphs/4-5-methylenephenanthrene.graph"),
    ),
    (
        "2-methyl-heptane",
        include_str!("../../data/graphs/2-methyl-heptane.graph"),
    ),
    (
        "3-methyl-heptane",
        include_str!("../../data/graphs/3-methyl-heptane.graph"),
    ),
    (
        "4-methyl-heptane",
        include_str!("../../data/graphs/4-methyl-heptane.graph"),
    ),
    (
        "2,2-dimethyl-hexane",
        include_str!("../../data/graphs/2-2-dimethyl-hexane.graph"),
    ),
    (
        "2,5-dimethyl-hexane",
        include_str!("../../data/graphs/2-5-dimethyl-hexane.graph"),
    ),
    (
        "3,3-dimethyl-hexane",
        include_str!("../../data/graphs/3-3-dimethyl-hexane.graph"),
    ),
    (
        "2-methyl-3-ethyl-pentane",
        include_str!("../../data/graphs/2-methyl-3-ethyl-pentane.graph"),
    ),
    (
        "3-methyl-3-ethyl-pentane",
        include_str!("../../data/graphs/3-methyl-3-ethyl-pentane.graph"),
    ),
    (
        "2,2,3-trimethyl-pentane",
        include_str!("../../data/graphs/2-2-3-trimethyl-pentane.graph"),
    ),
    (
        "2,2,4-trimethyl-pentane",
        include_str!("../../data/graphs/2-2-4-trimethyl-pentane.graph"),
    ),
    (
        "2,3,3-trimethyl-pentane",
        include_str!("../../data/graphs/2-3-3-trimethyl-pentane.graph"),
    ),
    (
        "2,3,4-trimethyl-pentane",
        include_str!("../../data/graphs/2-3-4-trimethyl-pentane.graph"),
    ),
    (
        "2,2,3,3-tetramethylbutane",
        include_str!("../../data/graphs/2-2-3-3-tetramethylbutane.graph"),
    ),
];
