"""
Async closure of super summit sets.

Starting from one member, every frontier element is conjugated by every canonical factor;
conjugates that keep the extremal (inf, sup) pair and were not seen before form the next
frontier. The frontier is fed to a pool of queue workers in chunks, level by level, so the
final member set does not depend on scheduling.
"""
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional, Set, Tuple, TypedDict

import aiostream
from tqdm.asyncio import tqdm, tqdm_asyncio
from tqdm.contrib.logging import logging_redirect_tqdm

from ..factors import CanonicalFactor
from ..normalform import NormalForm, conjugate_by_factor, to_text
from ..utils import run_async

DEFAULT_SSS_CAP = 100000


class SSSParams(TypedDict):
    inf_max: int
    sup_min: int
    cap: int
    factors: Tuple[CanonicalFactor, ...]


def extremal_conjugates(member: NormalForm, params: SSSParams) -> List[NormalForm]:
    """Conjugates A·member·A⁻¹, A in Q, that stay in the super summit set

    Args:
        member (NormalForm): a member of the super summit set.
        params (SSSParams): closure parameter dict

    Returns:
        list of NormalForm, possibly with repetitions.
    """
    found = []
    for a in params["factors"]:
        conjugate = conjugate_by_factor(member, a)
        if conjugate.inf == params["inf_max"] and conjugate.sup == params["sup_min"]:
            found.append(conjugate)
    return found


async def _closure_queue(
    queue: asyncio.Queue,
    seen: Set[NormalForm],
    next_level: List[NormalForm],
    stats: dict,
    params: SSSParams,
    progressbar: tqdm_asyncio = None,
    logger: logging.Logger = None,
):
    """Consumes frontier batches from the closure queue

    Args:
        queue (asyncio.Queue): Queue of frontier batches
        seen (set): members found so far, shared by all workers
        next_level (list): receives the newly found members
        stats (dict): closure statistics
        params (SSSParams): closure parameter dict
        logger (logging.Logger): Logger object
    """
    while True:
        batch = await queue.get()
        for member in batch:
            try:
                conjugates = extremal_conjugates(member, params)
            except Exception as e:
                with logging_redirect_tqdm(loggers=[logger]):
                    logger.error(f"conjugating {to_text(member)} failed: {e}")
                stats["failed"] += 1
                continue

            stats["conjugated"] += 1
            for conjugate in conjugates:
                if conjugate in seen:
                    continue
                if len(seen) >= params["cap"]:
                    stats["capped"] = True
                    break
                seen.add(conjugate)
                next_level.append(conjugate)
                progressbar.update(1)
            progressbar.set_postfix(stats=stats, refresh=False)

        queue.task_done()
        # give the other workers a turn, conjugation itself never awaits
        await asyncio.sleep(0)


async def _close_from_member(
    start: NormalForm,
    params: SSSParams,
    nb_workers: int = 8,
    batch_size: int = 16,
    logger: logging.Logger = None,
):
    """Breadth-first closure driven by a worker pool

    Returns:
        (members, stats): members sorted by their text form, and a dict of statistics.
    """
    queue = asyncio.Queue(nb_workers)
    progressbar = tqdm(
        smoothing=0, unit=" members", disable=logger.getEffectiveLevel() > logging.INFO
    )
    stats = {"conjugated": 0, "failed": 0, "levels": 0, "capped": False}

    seen = {start}
    progressbar.update(1)
    level = [start]

    loop = asyncio.get_event_loop()
    while level and not stats["capped"]:
        next_level: List[NormalForm] = []
        workers = [
            loop.create_task(
                _closure_queue(
                    queue,
                    seen,
                    next_level,
                    stats,
                    params=params,
                    progressbar=progressbar,
                    logger=logger,
                )
            )
            for _ in range(nb_workers)
        ]

        # get chunks of the frontier and add them to the async queue
        frontier = aiostream.stream.iterate(level)
        async with aiostream.stream.chunks(frontier, batch_size).stream() as chnk:
            async for batch in chnk:
                await queue.put(batch)

        await queue.join()
        for w in workers:
            w.cancel()

        stats["levels"] += 1
        logger.debug(f"level {stats['levels']}: {len(next_level)} new, {len(seen)} total")
        level = sorted(next_level, key=to_text)

    progressbar.close()
    stats["members"] = len(seen)
    return sorted(seen, key=to_text), stats


def close_super_summit_set(
    start: NormalForm,
    inf_max: int,
    sup_min: int,
    cap: int = DEFAULT_SSS_CAP,
    factor_cap: Optional[int] = None,
    nb_workers: int = 8,
    batch_size: int = 16,
    loglevel: str = "WARNING",
    error_log_path: Optional[Path] = None,
):
    """Closes the super summit set containing `start`

    Args:
        start (NormalForm): a member of the super summit set.
        inf_max (int): the maximal infimum of the conjugacy class.
        sup_min (int): the minimal supremum of the conjugacy class.
        cap (int, optional): Maximum number of members. Defaults to 100000.
        factor_cap (int, optional): Largest braid index whose canonical factors may be
            enumerated. Defaults to `None`, the presentation's own cap.
        nb_workers (int, optional): Number of queue workers. Defaults to 8.
        batch_size (int, optional): Maximum queue batch size. Defaults to 16.
        loglevel (str, optional): Level of the `sss_closure` logger.
            Levels up to `INFO` show a progressbar, `DEBUG` also reports every closure level.
            Defaults to `WARNING`.
        error_log_path (Path, optional): Writes closure errors to file. Defaults to None.

    Returns:
        (list of NormalForm, dict): the members and the closure statistics. When the cap was
        hit, `stats["capped"]` is set and the member list is partial; members whose
        conjugation failed are counted in `stats["failed"]`.

    Raises:
        EnumerationCapExceeded: if Q is too large to enumerate.
    """
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")

    logger = logging.getLogger("sss_closure")
    logger.setLevel(loglevel)
    logger.propagate = False

    # handlers are attached for this closure only
    formatter = logging.Formatter("%(name)s: %(message)s")
    handlers = [logging.StreamHandler(sys.stdout)]
    if error_log_path is not None:
        handlers.append(logging.FileHandler(error_log_path))
    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    params = {
        "inf_max": inf_max,
        "sup_min": sup_min,
        "cap": cap,
        "factors": start.algebra.enumerate(factor_cap),
    }

    try:
        return run_async(
            _close_from_member,
            start,
            params=params,
            nb_workers=nb_workers,
            batch_size=batch_size,
            logger=logger,
        )
    finally:
        for handler in handlers:
            logger.removeHandler(handler)
            handler.close()
