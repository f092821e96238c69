"""
The t-vMF similarity and its adaptive Dice loss
===============================================

kappa sharpens the cosine similarity. Larger kappa punishes the same
overlap harder, which is why kappa follows validation Dice during training.
"""

import numpy as np
import torch

from udaseg.losses import KappaState, tvmf_dice_loss, tvmf_similarity, update_kappa

cos = np.linspace(-1, 1, 5)
for kappa in (0.0, 16.0, 256.0):
    print("kappa %5.0f" % kappa, np.round(tvmf_similarity(cos, kappa), 3))

# a soft prediction with a decent but imperfect overlap
rng = np.random.default_rng(0)
labels = torch.from_numpy(rng.integers(0, 3, size=(8, 8, 8)))
target = torch.nn.functional.one_hot(labels, 3).permute(3, 0, 1, 2)[None].double()
pred = torch.softmax(4 * target + torch.from_numpy(rng.normal(size=target.shape)), dim=1)

state = KappaState.initial()
for val_dsc in ([0.0, 0.0], [0.5, 0.25], [0.9, 0.8]):
    state = update_kappa(state, val_dsc)
    print("kappa", state.kappa, "loss %.4f" % tvmf_dice_loss(pred, target, state).item())
