"""Masking-architecture probe: CR-GAN on heavy-JPEG corpus vs clean corpus.

On compressed data the quality-mask should open (m_q up, q in the data range);
on clean data the bypass should stay open (m_q low or q near 100).
"""
import csv, json, time
from pathlib import Path
from blindgan.data import synthesize_corpus
from blindgan.settings import build_setting, degrade_dataset
from blindgan.train import TrainConfig, run

BASE = Path("/root/pkg/.demo/mq_probe")
t0 = time.monotonic()
clean = BASE / "clean"
synthesize_corpus(clean, count=512, size=16, seed=300)
heavy = BASE / "degraded_S"
degrade_dataset(clean, build_setting("S"), seed=300, out_dir=heavy)

results = {}
for label, corpus in (("S_heavy_jpeg", heavy), ("A_clean", clean)):
    out = BASE / f"crgan_{label}"
    cfg = TrainConfig(
        variant="CR-GAN", setting_id="A", corpus_dir=str(corpus), out_dir=str(out),
        iterations=2500, batch_size=32, net_preset="tiny16",
        net_overrides={"base_channels": 16, "max_channels": 16, "latent_dim": 16},
        seed=0, log_every=100, sample_every=2500, checkpoint_every=2500,
    )
    run(cfg)
    rows = list(csv.DictReader(open(out / "metrics.csv")))
    tail = rows[-5:]
    results[label] = {
        "mean_m_q_tail": sum(float(r["mean_m_q"]) for r in tail) / len(tail),
        "mean_q_tail": sum(float(r["mean_q"]) for r in tail) / len(tail),
        "mean_m_q_first": float(rows[0]["mean_m_q"]),
        "mean_q_first": float(rows[0]["mean_q"]),
    }
results["minutes"] = (time.monotonic() - t0) / 60
print(json.dumps(results, indent=2))
with open(BASE / "result.json", "w") as fh:
    json.dump(results, fh, indent=2)
