import logging

from omegaconf import DictConfig

from bk_lab.verify.campaign import CLASS_APEX, MODE_EXHAUSTIVE, CampaignSpec

logger = logging.getLogger(__name__)


def campaign_spec_from_cfg(cfg: DictConfig) -> CampaignSpec:
    """
    Builds the campaign spec from the top level n / mode / seed keys and the campaign config group.
    apex_campaign=True is a shorthand for campaign.class_filter=4k1_free_with_apex.
    """
    campaign = cfg.campaign
    class_filter = CLASS_APEX if cfg.get("apex_campaign") else campaign.class_filter
    n_values = cfg.n if cfg.n is not None else campaign.n_values
    if isinstance(n_values, int):
        n_values = [n_values]
    mode = cfg.mode or campaign.mode or MODE_EXHAUSTIVE
    spec = CampaignSpec(
        list(n_values),
        class_filter=class_filter,
        min_delta=cfg.min_delta,
        mode=mode,
        sample_count=cfg.sample_count if cfg.sample_count is not None else campaign.sample_count,
        seed=cfg.seed,
        density=campaign.density,
        tactic_depth=cfg.tactic_depth,
        max_states=campaign.max_states,
        run_bk=campaign.run_bk,
        record_runtimes=campaign.record_runtimes,
    )
    logger.info("campaign spec: %s", spec)
    return spec
