"""Resume BR-GAN from 6k to 24k iterations and score both variants with texture-FID."""
import json, time
import torch
from blindgan import imgio
from blindgan.metrics import fid_from_images
from blindgan.train import TrainConfig, run
from blindgan.experiments import _sample_ema_images

t0 = time.monotonic()
cfg = TrainConfig(
    variant="BR-GAN", setting_id="D",
    corpus_dir="/root/pkg/.demo/ordering6k/degraded_D",
    out_dir="/root/pkg/.demo/ordering6k/BR-GAN_s0",
    iterations=24000, batch_size=32, net_preset="tiny16",
    net_overrides={"base_channels": 16, "max_channels": 16, "latent_dim": 16},
    seed=0, log_every=300, sample_every=6000, checkpoint_every=6000,
)
run(cfg, resume_from="/root/pkg/.demo/ordering6k/BR-GAN_s0/ckpt_final.pt")

clean = imgio.load_corpus("/root/pkg/.demo/ordering6k/clean")
degraded = imgio.load_corpus("/root/pkg/.demo/ordering6k/degraded_D")
scores = {}
for variant in ("GAN", "BR-GAN"):
    fake = _sample_ema_images(f"/root/pkg/.demo/ordering6k/{variant}_s0/ckpt_final.pt", 512)
    scores[variant] = {
        "fid_tex_clean": fid_from_images(clean, fake, "texture"),
        "fid_tex_degraded": fid_from_images(degraded, fake, "texture"),
    }
scores["reference_fid_tex_clean_vs_degraded"] = fid_from_images(clean, degraded, "texture")
scores["minutes"] = (time.monotonic() - t0) / 60
print(json.dumps(scores, indent=2))
with open("/root/pkg/.demo/ordering24k_result.json", "w") as fh:
    json.dump(scores, fh, indent=2)
