"""The two complete worked example tables for the weight-lowering maps.

Each row is (source, image, case label): 19 correspondences at weight 15 for
the family-A map and 18 at weight 17 for the family-B map.
"""

PHI_ROWS = [
    ("14~+1~", "14", "I"),
    ("10~+4~+1~", "10+4", "I"),
    ("8~+6~+1~", "8+6", "I"),
    ("15~", "14~", "II"),
    ("14~+1", "13~+1", "II"),
    ("12~+3", "11~+3", "II"),
    ("11~+3+1", "10~+3+1", "II"),
    ("10~+5", "9~+5", "II"),
    ("9~+5+1", "8~+5+1", "II"),
    ("8~+7", "7~+7", "II"),
    ("7~+7+1", "7+6~+1", "II"),
    ("7~+5+3", "6~+5+3", "II"),
    ("6~+5+3+1", "5~+5+3+1", "II"),
    ("10~+4~+1", "10~+3~+1", "II"),
    ("12~+3~", "12~+2~", "II"),
    ("9+6~", "10~+4~", "III-1"),
    ("7+5~+3", "8~+3~+3", "III-1"),
    ("8~+3~+3+1", "8+4+2", "III-2"),
    ("12~+2~+1", "12+2", "III-2"),
]

PSI_ROWS = [
    ("11~+5~+1~", "11+5", "I"),
    ("9~+7~+1~", "9+7", "I"),
    ("17~", "16~", "II"),
    ("15~+2", "14~+2", "II"),
    ("13~+4", "12~+4", "II"),
    ("11~+6", "10~+6", "II"),
    ("11~+4+2", "10~+4+2", "II"),
    ("9~+8", "8~+8", "II"),
    ("9~+6+2", "8~+6+2", "II"),
    ("10+7~", "10+6~", "II"),
    ("8+7~+2", "8+6~+2", "II"),
    ("7~+6+4", "6~+6+4", "II"),
    ("6+5~+4+2", "6+4~+4+2", "II"),
    ("11~+4~+2", "11~+3~+2", "II"),
    ("13~+4~", "13~+3~", "II"),
    ("15~+2~", "15~+1~", "II"),
    ("8+5~+4", "9~+4+3~", "III-1"),
    ("13~+2~+2", "13+3", "III-2"),
]
