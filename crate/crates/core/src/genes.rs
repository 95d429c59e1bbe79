//! dnaA gene sequences of four bacteria, used for the case study.

/// dnaA, *Pseudomonas putida F1* (1518 nt).
pub const GENE1: &str = concat!(
    "GTGTCAGTGGAACTTTGGCAGCAGTGCGTGGAGCTTCTGCGCGATGAACTGCCTGCCCAGCAATTCAACA",
    "CCTGGATCCGTCCGCTACAGGTCGAAGCCGAAGGCGACGAGTTGCGCGTCTATGCGCCTAACCGTTTCGT",
    "TCTCGATTGGGTCAATGAAAAGTACCTGGGTCGTTTGCTCGAGCTGTTGGGTGAGAACGGTAGCGGCATT",
    "GCACCAGCCCTTTCCTTATTAATAGGTAGCCGCCGCAGCTCGGCCCCAAGGGCTGCACCCAACGCGCCGG",
    "TCAGCGCTGCCGTTGCGGCTTCGCTGGCGCAGACTCAGGCGCACAAGACGGCCCCGGCAGCAGCGGTTGA",
    "ACCCGTTGCCGTGGCCGCGGCCGAGCCTGTATTGGTCGAGACGTCTTCGCGTGACAGCTTTGATGCCATG",
    "GCCGAGCCTGCTGCTGCGCCGCCCAGTGGTGGCCGGGCTGAACAGCGCACCGTGCAGGTTGAAGGTGCGC",
    "TCAAGCACACCAGTTACCTGAACCGGACCTTTACCTTTGACACCTTCGTCGAAGGTAAGTCGAACCAGCT",
    "CGCCCGCGCGGCTGCCTGGCAGGTTGCGGACAACCCTAAGCATGGCTACAACCCACTGTTCCTTTATGGC",
    "GGTGTGGGTTTGGGTAAAACCCACCTTATGCATGCTGTGGGTAACCATCTGCTGAAGAAGAATCCGAACG",
    "CCAAGGTGGTGTACCTGCATTCGGAGCGCTTCGTCGCGGACATGGTCAAAGCGTTGCAACTCAACGCCAT",
    "CAACGAATTCAAGCGCTTCTACCGCTCGGTGGACGCGTTGCTGATCGACGATATCCAGTTCTTCGCTCGC",
    "AAAGAGCGCTCGCAAGAAGAGTTTTTCCACACCTTCAACGCCTTGCTTGAGGGTGGCCAGCAGGTAATCC",
    "TTACCTCTGACCGCTATCCCAAGGAAATCGAAGGCCTGGAAGAGCGTCTGAAGTCGCGCTTTGGTTGGGG",
    "CCTGACGGTGGCTGTCGAGCCGCCAGAGCTGGAGACCCGCGTAGCGATCCTGATGAAGAAGGCCGACCAG",
    "GCCAAAGTCGAGCTCCCGCATGACGCAGCCTTTTTCATCGCTCAGCGCATCCGGTCCAACGTCCGTGAGC",
    "TGGAAGGTGCACTGAAGCGAGTTATTGCTCACTCGCACTTCATGGGGCGTGACATCACCATCGAGCTGAT",
    "TCGTGAATCGCTCAAGGATCTGTTGGCGCTGCAAGACAAACTGGTCAGTGTGGATAACATTCAGCGTACC",
    "GTCGCTGAGTACTACAAGATCAAGATCTCCGATCTGTTGTCCAAGCGTCGTTCGCGTTCTGTCGCGCGCC",
    "CGCGTCAGGTAGCCATGGCCCTGTCCAAGGAGTTGACCAACCACAGTCTGCCGGAAATCGGCGACATGTT",
    "CGGTGGTCGCGACCATACGACCGTGCTGCACGCCTGCCGCAAAATCAATGAACTGAAGGAATCCGACGCG",
    "GACATCCGCGAGGACTACAAGAACCTGCTGCGGACGCTGACGACCTGA",
);

/// dnaA, *Pseudomonas syringae pv. syringae B728a* (1536 nt).
pub const GENE2: &str = concat!(
    "GTGTCAGTGGAACTTTGGCAGCAGTGCGTGGAGCTTTTGCGCGATGAGCTGCCTGCCCAGCAATTCAACA",
    "CTTGGATCCGTCCGCTACAGGTCGAAGCCGAAGGCGACGAGTTGCGTGTGTACGCACCCAATCGTTTTGT",
    "TCTCGACTGGGTCAACGAAAAGTACCTTGGTCGTCTGCTCGAGCTTCTCGGCGAACACGGTCAAGGCATG",
    "GCCCCTGCTCTTTCCTTATTAATAGGAAGCAAGCGCAGCTCAGCACCGCGTGCTGCCCCGAATGCACCCT",
    "TGGCCGCTGCAGCCTCACAGGCGCTGTCTGCCAATTCGGTCAGCAGCGTCTCGGCCCCGGCTCCTGCCAC",
    "GGCTGCTCCAGCTGCTGCTGTAGCGACGCCTGCACCGGTTCAGAACGTTGCAACACACGACGAACCGTCG",
    "CGTGACAGCTTCGATCCGATGGCCGGAGCCAGCTCGCAACAAGCGCCCGCCCGCGCTGAACAACGTACCG",
    "TCCAGGTAGAAGGTGCGCTCAAGCACACCAGTTACCTGAACCGTACGTTCACGTTCGAAAATTTCGTCGA",
    "GGGTAAGTCCAACCAGCTGGCACGCGCTGCGGCCTGGCAGGTTGCCGACAACCCCAAGCATGGCTACAAC",
    "CCGCTGTTCCTTTATGGCGGCGTGGGTCTTGGTAAAACTCACTTGATGCATGCGGTGGGTAACCACCTGC",
    "TGAAGAAGAACCCGAACGCCAAGGTCGTGTACCTGCATTCGGAGCGCTTCGTTGCAGACATGGTCAAGGC",
    "CTTGCAGCTCAATGCAATCAACGAGTTCAAGCGCTTCTACCGTTCAGTCGATGCGCTGCTGATCGACGAC",
    "ATCCAGTTTTTTGCCCGCAAGGAACGTTCGCAGGAAGAGTTTTTCCACACGTTCAACGCGCTGCTGGAAG",
    "GCGGACAGCAGGTCATTCTGACCAGCGACCGCTATCCCAAGGAAATCGAAGGCCTTGAAGAGCGACTCAA",
    "ATCGCGTTTTGGCTGGGGCCTGACGGTTGCCGTCGAGCCTCCGGAGCTGGAAACCCGCGTGGCGATCCTC",
    "ATGAAAAAAGCAGATCAGGCCAAGGTCGATCTGCCCCATGACGCAGCGTTCTTCATCGCCCAGCGAATTC",
    "GCTCCAACGTCCGTGAGCTGGAAGGTGCGCTCAAGCGCGTCATCGCTCACTCGCACTTCATGGGCCGCGA",
    "CATCACCATCGAGCTGATTCGCGAGTCGCTGAAGGACTTGCTGGCGTTGCAGGACAAGCTGGTCAGTGTG",
    "GATAACATTCAGCGCACTGTCGCCGAGTACTACAAGATCAAGATTTCCGATCTGCTGTCCAAGCGTCGTT",
    "CCCGCTCTGTCGCCCGGCCTCGTCAGGTCGCGATGGCGCTCTCCAAGGAACTCACCAACCACAGTCTTCC",
    "GGAAATCGGTGACGTGTTTGGTGGCCGTGACCACACGACTGTCTTGCACGCATGCCGAAAGATCAACGAG",
    "CTCAAGGAATCCGATGCGGATATCCGCGAGGACTACAAGAACCTGCTGCGCACTCTGACTACGTGA",
);

/// dnaA, *Escherichia coli E24377A* (1404 nt).
pub const GENE3: &str = concat!(
    "GTGTCACTTTCGCTTTGGCAGCAGTGTCTTGCCCGATTGCAGGATGAGTTACCAGCCACAGAATTCAGTA",
    "TGTGGATACGCCCATTGCAGGCGGAACTGAGCGATAACACGCTGGCCCTGTACGCGCCAAACCGTTTTGT",
    "CCTCGATTGGGTACGGGACAAGTACCTTAATAATATCAATGGACTGCTAACCAGTTTCTGCGGAGCGGAT",
    "GCCCCACAGCTGCGTTTTGAAGTCGGCACCAAACCGGTGACGCAAACGCCACAAGCGGCAGTGACGAGCA",
    "ACGTCGCGGCCCCTGCACAGGTGGCGCAAACGCAGCCGCAACGTGCTGCGCCTTCTACGCGCTCAGGTTG",
    "GGATAACGTCCCGGCCCCGGCAGAACCGACCTATCGTTCTAACGTAAACGTCAAACACACGTTTGATAAC",
    "TTCGTTGAAGGTAAATCTAACCAACTGGCGCGCGCGGCGGCTCGCCAGGTGGCGGATAACCCTGGCGGTG",
    "CCTATAACCCGTTGTTCCTTTATGGCGGCACGGGTCTGGGTAAAACTCACCTGCTGCATGCGGTGGGTAA",
    "CGGCATTATGGCGCGCAAGCCGAATGCCAAAGTGGTTTATATGCACTCCGAGCGCTTTGTTCAGGACATG",
    "GTTAAAGCCCTGCAAAACAACGCGATCGAAGAGTTTAAACGCTACTACCGTTCCGTAGATGCACTGCTGA",
    "TCGACGATATTCAGTTTTTTGCTAATAAAGAACGATCTCAGGAAGAGTTTTTCCACACCTTCAACGCCCT",
    "GCTGGAAGGTAATCAACAGATCATTCTCACCTCGGATCGCTATCCGAAAGAGATCAACGGCGTTGAGGAT",
    "CGTTTGAAATCCCGCTTCGGTTGGGGACTGACTGTGGCGATCGAACCGCCAGAGCTGGAAACCCGTGTGG",
    "CGATCCTGATGAAAAAGGCCGACGAAAACGACATTCGTTTGCCGGGTGAAGTGGCGTTCTTTATCGCCAA",
    "GCGTCTACGATCTAACGTACGTGAGCTGGAAGGGGCGCTGAACCGCGTCATTGCCAACGCCAACTTTACC",
    "GGAAGGGCGATCACCATCGACTTCGTGCGTGAGGCGCTGCGCGACTTGCTGGCATTGCAGGAAAAACTGG",
    "TCACCATCGACAATATTCAGAAGACGGTGGCGGAGTACTACAAGATCAAAGTTGCGGATCTCCTTTCCAA",
    "GCGTCGATCCCGCTCGGTGGCGCGTCCGCGCCAGATGGCGATGGCGCTGGCGAAAGAGCTGACTAACCAC",
    "AGTCTGCCGGAGATTGGCGATGCGTTTGGTGGTCGTGACCACACGACGGTGCTTCATGCCTGCCGTAAGA",
    "TCGAGCAGTTGCGTGAAGAGAGCCACGATATCAAAGAAGATTTTTCAAATTTAATCAGAACATTGTCATC",
    "GTAA",
);

/// dnaA, *Erwinia carotovora subsp. atroseptica SCRI1043* (1398 nt).
pub const GENE4: &str = concat!(
    "GTGTCACTTTCGCTTTGGCAGCAGTGTCTTGCCCGTTTGCAGGATGAGTTACCTGCCACAGAATTCAGTA",
    "TGTGGATACGCCCGTTGCAGGCGGAACTGAGTGATAACACTCTGGCGCTCTACGCCCCCAATCGCTTTGT",
    "GCTGGATTGGGTTCGTGATAAATACTTAAATAATATCAATGTCCTGCTGAATGATTTTTGCGGGATGGAT",
    "GCCCCCTTACTGCGTTTTGAAGTGGGGAGTAAACCGCTGGTTCAAACCATAAGCCAGCCAGCGCAGTCGC",
    "ACCACAACCCTGTCAGCGTTGCACGGCAACAGCCAGTACGCATGGCACCGGTACGCCCAAGCTGGGATAA",
    "CTCGCCTGTACAGGCAGAGCATACCTACCGTTCCAATGTGAACCCGAAACATACGTTTGATAACTTCGTT",
    "GAGGGTAAATCGAACCAGTTAGCACGGGCAGCGGCACGTCAGGTGGCTGACAACCCAGGCGGCGCGTATA",
    "ACCCGCTGTTTCTCTATGGCGGCACTGGCTTGGGTAAAACGCACCTGTTGCATGCAGTGGGGAATGGTAT",
    "TATCGCCCGTAAACCCAACGCGAAGGTGGTCTACATGCACTCCGAGCGTTTCGTGCAGGATATGGTGAAG",
    "GCGTTGCAGAACAATGCGATTGAAGAGTTCAAACGCTACTACCGTTCTGTTGACGCACTGCTGATCGATG",
    "ATATTCAATTCTTCGCTAATAAAGAGCGTTCGCAGGAAGAGTTCTTTCATACCTTTAATGCACTGCTGGA",
    "AGGCAACCAGCAAATCATTCTGACTTCTGACCGCTACCCGAAAGAGATCAATGGTGTGGAAGATCGTCTA",
    "AAATCCCGCTTTGGTTGGGGGTTAACGGTCGCGATTGAACCGCCTGAGCTGGAAACCCGCGTGGCGATTC",
    "TGATGAAAAAGGCAGATGAAAATGACATTCGCTTGCCTGGTGAAGTCGCATTCTTTATTGCTAAACGCCT",
    "GCGTTCTAACGTGCGTGAGTTGGAAGGTGCATTGAACCGCGTTATTGCTAACGCCAATTTTACCGGCCGT",
    "TCGATCACCATTGATTTTGTGCGTGAGGCGCTGCGCGATCTGCTGGCGTTGCAGGAAAAGCTGGTTACTA",
    "TCGACAATATTCAAAAGACCGTGGCGGAATACTATAAAATCAAGATAGCCGACCTGCTGTCTAAACGACG",
    "TTCCCGCTCGGTGGCGCGTCCGCGCCAGATGGCGATGGCGTTGGCGAAAGAACTGACGAATCACAGCCTG",
    "CCGGAAATTGGCGATGCCTTTGGCGGGCGTGATCATACGACGGTGTTGCATGCCTGCCGCAAGATTGAGC",
    "AGTTGCGTGAAGAAAGCCACGACATCAAAGAAGATTTTTCCAATTTAATCAGAACACTATCGTCATAA",
);

/// Organism names, in the same order as [`GENES`].
pub const ORGANISMS: [&str; 4] = [
    "Pseudomonas putida F1",
    "Pseudomonas syringae pv. syringae B728a",
    "Escherichia coli E24377A",
    "Erwinia carotovora subsp. atroseptica SCRI1043",
];

pub const GENES: [&str; 4] = [GENE1, GENE2, GENE3, GENE4];
