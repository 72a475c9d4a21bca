"""The LSTM autoencoder baseline.

Encodes a sequence to a 2-D code, repeats the code as decoder input and
reads out every step. Trained directly on RMSE.
"""
from latentode import data as D
from latentode.baseline import LSTMAutoencoder, rmse
from latentode.train import AdamState

ds = D.subsample(D.gen_springs([1], 2, seed=0), 40)
x = ds.samples[:1]
model = LSTMAutoencoder(seed=0)
opt = AdamState(lr=0.003)
print("code for the sequence:", model.encode(x[0]).data)
for step in range(1, 301):
    loss, grads = model.loss_and_grads(x, ds.times, None)
    opt.step(model.params, grads)
    if step % 50 == 0:
        print(f"step {step:>3}: RMSE {loss:.4f}")
print("reconstruction RMSE:", rmse(model.reconstruct(x)[0], x[0]))
