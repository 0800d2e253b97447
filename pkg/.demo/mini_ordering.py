"""Mini desk demonstration: GAN vs BR-GAN on blurred corpus (setting D)."""
import json, time
from blindgan.experiments import degradation_ordering_experiment

t0 = time.monotonic()
result = degradation_ordering_experiment(
    "/root/pkg/.demo/ordering",
    variants=("GAN", "BR-GAN"),
    setting_id="D",
    corpus_count=512,
    image_size=16,
    iterations=1200,
    seeds=(0,),
    net_preset="tiny16",
    net_overrides={"base_channels": 16, "max_channels": 16, "latent_dim": 16},
    batch_size=32,
)
out = {"medians": result["medians"], "per_seed": result["per_seed"],
       "minutes": (time.monotonic() - t0) / 60}
print(json.dumps(out, indent=2, default=str))
with open("/root/pkg/.demo/ordering_result.json", "w") as fh:
    json.dump(out, fh, indent=2, default=str)
