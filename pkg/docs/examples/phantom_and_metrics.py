"""
Phantom volumes and segmentation metrics
========================================

Generate one source and one target phantom, resample them to the desk
grid and score a deliberately shifted prediction.
"""

import numpy as np

from udaseg.metrics import assd, dsc
from udaseg.phantom import PhantomSpec, generate_case
from udaseg.volume import VS, PreprocessConfig, preprocess, resample

# the same anatomy seed rendered in both domains
src, labels, grade = generate_case(PhantomSpec(seed=3, koos_grade=3, domain="SOURCE"))
tgt, _, _ = generate_case(PhantomSpec(seed=3, koos_grade=3, domain="TARGET"))
print("grade", grade, "shape", src.shape, "spacing", src.spacing)

cfg = PreprocessConfig((1.28, 1.28, 1.0))
src_desk = preprocess(src, cfg)
labels_desk = resample(labels, cfg.target_spacing)
print("desk grid", src_desk.shape, "intensity range", src_desk.data.min(), src_desk.data.max())

# tumor is bright in the source domain and dark in the target domain
vs = labels.data == VS
print("mean VS intensity  source %.1f  target %.1f" % (src.data[vs].mean(), tgt.data[vs].mean()))

gt = labels_desk.data == VS
shifted = np.roll(gt, 1, axis=0)
print("DSC  %.3f" % dsc(shifted, gt))
print("ASSD %.3f mm" % assd(shifted, gt, labels_desk.spacing))
