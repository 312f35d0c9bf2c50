"""Translate held-out corrupted phantoms and measure the restoration.

Requires the checkpoint from demo 03. For each held-out scene the corrupted
input and the translated output are scored against the clean twin; the
out-of-view and saturation scores should drop sharply after translation.
Side-by-side strips (input | translated | clean) land in
demos/output/translations/.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from echosynth import dataio, inference, phantom, training

RUN = Path(__file__).parent / "output" / "desk_run"
OUT = Path(__file__).parent / "output" / "translations"
LEVELS = {"speckle": 0.5, "saturation": 0.5, "out_of_view": 0.4, "low_contrast": 0.4}


def latest_checkpoint(run_dir):
    checkpoints = sorted((run_dir / "checkpoints").iterdir())
    if not checkpoints:
        raise SystemExit("run demos/03_desk_scale_training.py first")
    return checkpoints[-1]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    state = training.load_train_state(latest_checkpoint(RUN))
    translate = inference.as_translator(state.bundle.G.eval())

    print("seed   oov in->out      sat in->out")
    for seed in (200, 201, 202, 203, 204):
        config = phantom.PhantomConfig(
            seed=seed, num_frames=12, image_size=64, cycle_period=6,
            artifact_levels=LEVELS,
        )
        pair = phantom.generate_phantom_pair(config)
        seq = dataio.FrameSequence(dataio.to_network_range(pair.corrupted.pixels))
        result = inference.translate_sequence(seq, translate)
        out = np.clip(dataio.from_network_range(result.frames.pixels), 0.0, 1.0)

        def mean_score(frames, key):
            return np.mean([
                phantom.artifact_score(frames[t], pair.clean.pixels[t])[key]
                for t in range(len(pair.clean))
            ])

        print(f"{seed}   {mean_score(pair.corrupted.pixels, 'out_of_view'):.3f} -> "
              f"{mean_score(out, 'out_of_view'):.3f}      "
              f"{mean_score(pair.corrupted.pixels, 'saturation'):.4f} -> "
              f"{mean_score(out, 'saturation'):.4f}")

        t = len(pair.clean) // 2
        strip = np.concatenate([pair.corrupted.pixels[t], out[t], pair.clean.pixels[t]], axis=1)
        Image.fromarray((np.clip(strip, 0, 1) * 255).astype(np.uint8)).save(
            OUT / f"seed_{seed}.png"
        )

    stats = inference.benchmark_throughput(seq, translate, repeats=3)
    print(f"\nthroughput: {stats.mean_s * 1e3:.2f} ms/frame ({stats.fps:.1f} fps) on this machine")
    print(f"strips written to {OUT}")


if __name__ == "__main__":
    main()
