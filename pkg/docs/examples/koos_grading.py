"""
Koos grading from segmentation masks
====================================

Tumor volume and bounding box extents feed four one-vs-rest linear SVMs.
"""

from udaseg.koos import extract_features, predict_grades, train_svm
from udaseg.metrics import ma_mae
from udaseg.phantom import PhantomSpec, generate_case

feats, grades = [], []
for grade in (1, 2, 3, 4):
    for seed in range(6):
        _, labels, g = generate_case(PhantomSpec(seed=100 * grade + seed, koos_grade=grade))
        feats.append(extract_features(labels))
        grades.append(g)

print(feats[0])
print(feats[-1])

model = train_svm(feats, grades, C=1.0)
pred = predict_grades(model, feats)
print("training MA-MAE", ma_mae(pred, grades))

# fresh cases the classifier has not seen
test = [generate_case(PhantomSpec(seed=9000 + g, koos_grade=g)) for g in (1, 2, 3, 4)]
pred = predict_grades(model, [extract_features(l) for _, l, _ in test])
print("held out", pred, "truth", [g for _, _, g in test])
