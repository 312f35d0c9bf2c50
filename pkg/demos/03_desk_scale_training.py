"""Train the desk-scale translation model on synthetic phantoms.

Corrupted renders play the echo domain, clean renders the MRI domain; 500
alternating steps take a couple of minutes on a laptop CPU. The run
directory (demos/output/desk_run/) gets the loss log, config lock, and a
resumable checkpoint that demo 04 picks up.
"""

from pathlib import Path

import numpy as np

from echosynth import dataio, phantom, training

OUT = Path(__file__).parent / "output" / "desk_run"
LEVELS = {"speckle": 0.5, "saturation": 0.5, "out_of_view": 0.4, "low_contrast": 0.4}


def sequence_triplets(seed):
    config = phantom.PhantomConfig(
        seed=seed, num_frames=12, image_size=64, cycle_period=6, artifact_levels=LEVELS
    )
    pair = phantom.generate_phantom_pair(config)
    echo = dataio.FrameSequence(dataio.to_network_range(pair.corrupted.pixels))
    mri = dataio.FrameSequence(dataio.to_network_range(pair.clean.pixels))
    return dataio.make_temporal_triplets(echo), dataio.make_temporal_triplets(mri)


def main():
    echo, mri = [], []
    for seed in (100, 101, 102, 103):
        e, m = sequence_triplets(seed)
        echo.extend(e)
        mri.extend(m)
    print(f"training pools: {len(echo)} echo triplets, {len(mri)} mri triplets")

    cfg = training.TrainConfig(
        epochs=13, decay_start_epoch=13, image_size=64, base_width=8,
        n_res_blocks=2, seed=7,
    )
    print(training.dry_run(cfg))

    def progress(report):
        if report.step % 100 == 0:
            print(f"  step {report.step:4d}  total {report.total_T:7.4f}  "
                  f"cyc {report.cyc:6.4f}  d1 {report.d1:6.4f}  d2 {report.d2:6.4f}")

    state, reports = training.train(
        cfg, echo, mri, out_dir=OUT, checkpoint_every=5, max_steps=500,
        on_report=progress,
    )
    first = np.mean([r.cyc for r in reports[:10]])
    last = np.mean([r.cyc for r in reports[-10:]])
    print(f"\ncycle loss: first-10 mean {first:.4f} -> last-10 mean {last:.4f} "
          f"({last / first:.1%} of start)")
    print(f"checkpoints and losses.jsonl in {OUT}")


if __name__ == "__main__":
    main()
